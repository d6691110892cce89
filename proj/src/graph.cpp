#include "edgecut/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace edgecut {

MultiGraph MultiGraph::build(const std::vector<std::pair<std::string, std::string>>& edge_list,
                             const std::vector<std::string>& isolated) {
  std::set<std::string> name_set(isolated.begin(), isolated.end());
  for (const auto& [a, b] : edge_list) {
    if (a == b) {
      throw Error("loop", "loop edge rejected: (" + a + "," + b + ")");
    }
    name_set.insert(a);
    name_set.insert(b);
  }

  MultiGraph g;
  g.names_.assign(name_set.begin(), name_set.end());
  std::map<std::string, Vertex> index;
  for (Vertex v = 0; v < g.vertex_count(); ++v) index[g.names_[v]] = v;

  g.incident_.resize(g.names_.size());
  for (const auto& [a, b] : edge_list) {
    EdgeIdx e = static_cast<EdgeIdx>(g.edges_.size());
    Vertex u = index[a];
    Vertex v = index[b];
    g.edges_.emplace_back(u, v);
    g.incident_[u].push_back(e);
    g.incident_[v].push_back(e);
  }
  return g;
}

Vertex MultiGraph::vertex(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) {
    throw Error("unknownvertex", "unknown vertex id: " + name);
  }
  return static_cast<Vertex>(it - names_.begin());
}

EdgeIdx MultiGraph::edge(const std::string& name) const {
  if (name.size() >= 2 && name[0] == 'e') {
    try {
      EdgeIdx e = std::stoi(name.substr(1));
      if (e >= 0 && e < edge_count()) return e;
    } catch (const std::exception&) {
    }
  }
  throw Error("unknownedge", "unknown edge id: " + name);
}

std::vector<int> MultiGraph::component_labels(const std::vector<char>& removed_edge) const {
  std::vector<int> label(names_.size(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < vertex_count(); ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (EdgeIdx e : incident_[u]) {
        if (!removed_edge.empty() && removed_edge[e]) continue;
        Vertex w = other_end(e, u);
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool MultiGraph::connected() const {
  if (vertex_count() == 0) return true;
  auto label = component_labels();
  return *std::max_element(label.begin(), label.end()) == 0;
}

bool induced_connected(const MultiGraph& g, const std::vector<Vertex>& verts,
                       const std::vector<char>& removed_edges) {
  if (verts.empty()) return false;
  std::vector<char> inside(g.vertex_count(), 0);
  for (Vertex v : verts) inside[v] = 1;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{verts[0]};
  seen[verts[0]] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (EdgeIdx e : g.incident(u)) {
      if (!removed_edges.empty() && removed_edges[e]) continue;
      Vertex w = g.other_end(e, u);
      if (inside[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == verts.size();
}

Region make_region(const MultiGraph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) throw Error("emptyregion", "region vertex set must be nonempty");
  if (!induced_connected(g, vertices)) {
    throw Error("notregion", "vertex set does not induce a connected subgraph");
  }
  return Region{&g, std::move(vertices)};
}

Cut cut_from_side(const MultiGraph& g, const std::vector<Vertex>& side_a,
                  const std::vector<char>& removed_edges) {
  std::vector<char> in_a(g.vertex_count(), 0);
  for (Vertex v : side_a) in_a[v] = 1;
  Cut c;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    (in_a[v] ? c.side_a : c.side_b).push_back(v);
  }
  for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
    if (!removed_edges.empty() && removed_edges[e]) continue;
    auto [u, v] = g.endpoints(e);
    if (in_a[u] != in_a[v]) c.edges.push_back(e);
  }
  return c;
}

bool cut_is_valid(const MultiGraph& g, const Cut& c, const std::vector<char>& removed_edges) {
  if (c.side_a.empty() || c.side_b.empty()) return false;
  std::vector<int> side(g.vertex_count(), -1);
  for (Vertex v : c.side_a) {
    if (v < 0 || v >= g.vertex_count() || side[v] != -1) return false;
    side[v] = 0;
  }
  for (Vertex v : c.side_b) {
    if (v < 0 || v >= g.vertex_count() || side[v] != -1) return false;
    side[v] = 1;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (side[v] == -1) return false;
  }
  std::vector<EdgeIdx> crossing;
  for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
    if (!removed_edges.empty() && removed_edges[e]) continue;
    auto [u, v] = g.endpoints(e);
    if (side[u] != side[v]) crossing.push_back(e);
  }
  std::vector<EdgeIdx> declared = c.edges;
  std::sort(declared.begin(), declared.end());
  return crossing == declared;
}

bool bond_is_valid(const MultiGraph& g, const Cut& c, const std::vector<char>& removed_edges) {
  if (!cut_is_valid(g, c, removed_edges)) return false;
  if (c.edges.empty()) return false;
  return induced_connected(g, c.side_a, removed_edges) &&
         induced_connected(g, c.side_b, removed_edges);
}

std::vector<EdgeIdx> boundary_edges(const MultiGraph& g, const std::vector<Vertex>& vertex_set) {
  std::vector<char> inside(g.vertex_count(), 0);
  for (Vertex v : vertex_set) inside[v] = 1;
  std::vector<EdgeIdx> out;
  for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (inside[u] != inside[v]) out.push_back(e);
  }
  return out;
}

std::vector<EdgeIdx> boundary_edges(const Region& r) {
  return boundary_edges(*r.graph, r.vertices);
}

std::vector<Region> components_after_deletion(const MultiGraph& g,
                                              const std::vector<EdgeIdx>& deleted) {
  std::vector<char> removed(g.edge_count(), 0);
  for (EdgeIdx e : deleted) {
    if (e < 0 || e >= g.edge_count()) throw Error("unknownedge", "edge index out of range");
    removed[e] = 1;
  }
  auto label = g.component_labels(removed);
  int count = g.vertex_count() == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<Region> out(count);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out[label[v]].graph = &g;
    out[label[v]].vertices.push_back(v);
  }
  return out;
}

bool is_bond(const MultiGraph& g, const std::vector<EdgeIdx>& f) {
  std::vector<char> removed(g.edge_count(), 0);
  for (EdgeIdx e : f) {
    if (e < 0 || e >= g.edge_count()) throw Error("unknownedge", "edge index out of range");
    removed[e] = 1;
  }
  auto label = g.component_labels(removed);
  if (g.vertex_count() == 0) return false;
  if (*std::max_element(label.begin(), label.end()) != 1) return false;
  for (EdgeIdx e : f) {
    auto [u, v] = g.endpoints(e);
    if (label[u] == label[v]) return false;
  }
  return true;
}

}  // namespace edgecut
