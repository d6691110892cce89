#include "edgecut/tree_cut.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace edgecut {

namespace {

// Component label per tree node after deleting the flagged tree edges.
std::vector<int> tree_components(int node_count, const std::vector<std::pair<int, int>>& edges,
                                 const std::vector<char>& removed) {
  std::vector<std::vector<int>> adj(node_count);
  for (size_t i = 0; i < edges.size(); ++i) {
    if (!removed.empty() && removed[i]) continue;
    adj[edges[i].first].push_back(edges[i].second);
    adj[edges[i].second].push_back(edges[i].first);
  }
  std::vector<int> label(node_count, -1);
  int next = 0;
  for (int s = 0; s < node_count; ++s) {
    if (label[s] != -1) continue;
    std::vector<int> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
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

}  // namespace

std::string decomposition_is_valid(const TreeCutDecomposition& d) {
  if (d.base == nullptr) return "no base graph";
  if (d.node_count <= 0) return "empty decomposition";
  if (static_cast<int>(d.parts.size()) != d.node_count) return "part count mismatch";
  std::vector<int> owner(d.base->vertex_count(), -1);
  for (int t = 0; t < d.node_count; ++t) {
    if (d.parts[t].empty()) return "empty part " + d.node_name(t);
    for (Vertex v : d.parts[t]) {
      if (v < 0 || v >= d.base->vertex_count() || owner[v] != -1) {
        return "parts do not partition V(G)";
      }
      owner[v] = t;
    }
  }
  for (int v = 0; v < d.base->vertex_count(); ++v) {
    if (owner[v] == -1) return "parts do not cover V(G)";
  }
  if (static_cast<int>(d.tree_edges.size()) != d.node_count - 1) return "tree edge count wrong";
  auto label = tree_components(d.node_count, d.tree_edges, {});
  if (*std::max_element(label.begin(), label.end()) != 0) return "tree is not connected";
  return "";
}

Cut adhesion_set(const TreeCutDecomposition& d, int tree_edge_index) {
  if (tree_edge_index < 0 || tree_edge_index >= static_cast<int>(d.tree_edges.size())) {
    throw Error("notreeedge", "tree edge index out of range");
  }
  std::vector<char> removed(d.tree_edges.size(), 0);
  removed[tree_edge_index] = 1;
  auto label = tree_components(d.node_count, d.tree_edges, removed);
  int side_label = label[d.tree_edges[tree_edge_index].first];
  std::vector<Vertex> side;
  for (int t = 0; t < d.node_count; ++t) {
    if (label[t] == side_label) {
      side.insert(side.end(), d.parts[t].begin(), d.parts[t].end());
    }
  }
  std::sort(side.begin(), side.end());
  return cut_from_side(*d.base, side);
}

AdhesionReport adhesion_report(const TreeCutDecomposition& d) {
  AdhesionReport report;
  for (size_t i = 0; i < d.tree_edges.size(); ++i) {
    Cut c = adhesion_set(d, static_cast<int>(i));
    report.max_adhesion = std::max(report.max_adhesion, static_cast<int>(c.edges.size()));
    report.adhesion.push_back(std::move(c.edges));
  }
  return report;
}

MultiGraph quotient_graph(const MultiGraph& g, const BlockPartition& p) {
  std::vector<int> block_index(g.vertex_count(), -1);
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    for (Vertex v : p.blocks[b]) block_index[v] = static_cast<int>(b);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (block_index[v] == -1) throw Error("badpartition", "partition does not cover V(G)");
  }
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> isolated;
  for (const auto& blk : p.blocks) isolated.push_back(g.vertex_name(blk.front()));
  for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    int bu = block_index[u];
    int bv = block_index[v];
    if (bu == bv) continue;
    auto key = std::minmax(bu, bv);
    if (seen.insert(key).second) {
      pairs.emplace_back(g.vertex_name(p.blocks[key.first].front()),
                         g.vertex_name(p.blocks[key.second].front()));
    }
  }
  return MultiGraph::build(pairs, isolated);
}

KBlockDecomposition decompose_into_k_blocks(const MultiGraph& g, int k,
                                            DecompositionBackend backend) {
  if (!g.connected()) throw Error("disconnected", "decompose_into_k_blocks requires connected G");
  if (k < 1) throw Error("badk", "k must be >= 1");

  BlockPartition part = k_edge_blocks(g, k);
  KBlockDecomposition out;
  out.backend = backend;
  out.decomposition.base = &g;
  out.decomposition.node_count = static_cast<int>(part.blocks.size());
  out.decomposition.parts = part.blocks;

  // Block i's representative is its smallest member; representatives sort in
  // block order, so "representative name -> quotient/contracted vertex i"
  // matches "tree node i" with no translation table.
  if (backend == DecompositionBackend::Paper) {
    MultiGraph quotient = quotient_graph(g, part);
    SpanningTreeCertificate cert = finitely_separating_spanning_tree(quotient, 0);
    for (EdgeIdx qe : cert.tree_edges) {
      auto [qu, qv] = quotient.endpoints(qe);
      out.decomposition.tree_edges.emplace_back(qu, qv);
    }
    out.certificate = std::move(cert);
    out.quotient = std::move(quotient);
  } else {
    // Contract every block to its representative, keeping one parallel edge
    // per crossing G-edge, and take the Gomory-Hu tree of the result.
    std::vector<int> block_index(g.vertex_count(), -1);
    for (size_t b = 0; b < part.blocks.size(); ++b) {
      for (Vertex v : part.blocks[b]) block_index[v] = static_cast<int>(b);
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> isolated;
    for (const auto& blk : part.blocks) isolated.push_back(g.vertex_name(blk.front()));
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.endpoints(e);
      if (block_index[u] == block_index[v]) continue;
      pairs.emplace_back(g.vertex_name(part.blocks[block_index[u]].front()),
                         g.vertex_name(part.blocks[block_index[v]].front()));
    }
    MultiGraph contracted = MultiGraph::build(pairs, isolated);
    GomoryHuTree tree = gomory_hu(contracted);
    for (const auto& te : tree.edges) {
      out.decomposition.tree_edges.emplace_back(te[0], te[1]);
    }
  }

  std::string err = decomposition_is_valid(out.decomposition);
  if (!err.empty()) throw Error("internal", "constructed decomposition invalid: " + err);
  out.adhesion = adhesion_report(out.decomposition);
  return out;
}

Region region_up(const TreeCutDecomposition& d, const std::vector<int>& tree_nodes) {
  std::vector<int> nodes(tree_nodes.begin(), tree_nodes.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (nodes.empty()) throw Error("notregion", "empty tree-node set");
  for (int t : nodes) {
    if (t < 0 || t >= d.node_count) throw Error("notreeedge", "tree node out of range");
  }
  // Connectivity of the node set in T.
  std::set<int> in_set(nodes.begin(), nodes.end());
  std::vector<std::vector<int>> adj(d.node_count);
  for (const auto& [a, b] : d.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<int> seen{nodes[0]};
  std::vector<int> stack{nodes[0]};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (in_set.count(w) && !seen.count(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  if (seen.size() != nodes.size()) {
    throw Error("notregion", "tree-node set is not connected in T");
  }

  std::vector<Vertex> lifted;
  for (int t : nodes) lifted.insert(lifted.end(), d.parts[t].begin(), d.parts[t].end());
  std::sort(lifted.begin(), lifted.end());
  if (!induced_connected(*d.base, lifted)) {
    throw Error("notregion", "lifted vertex set is not connected in G");
  }
  return Region{d.base, std::move(lifted)};
}

std::vector<std::vector<int>> region_down(const TreeCutDecomposition& d, const Region& c) {
  const MultiGraph& g = *d.base;
  std::vector<char> in_c(g.vertex_count(), 0);
  for (Vertex v : c.vertices) in_c[v] = 1;

  // The region must respect parts.
  std::vector<char> part_in_c(d.node_count, 0);
  for (int t = 0; t < d.node_count; ++t) {
    int inside = 0;
    for (Vertex v : d.parts[t]) inside += in_c[v];
    if (inside != 0 && inside != static_cast<int>(d.parts[t].size())) {
      throw Error("splitspart", "region splits part " + d.node_name(t));
    }
    part_in_c[t] = inside > 0;
  }

  // F' = every tree edge whose adhesion set meets the region boundary; with
  // the witnessing-edge property this keeps each component of T - F' purely
  // inside or purely outside the region.
  std::vector<EdgeIdx> boundary = boundary_edges(c);
  std::set<EdgeIdx> f(boundary.begin(), boundary.end());
  std::vector<char> cut_tree_edge(d.tree_edges.size(), 0);
  for (size_t i = 0; i < d.tree_edges.size(); ++i) {
    Cut adh = adhesion_set(d, static_cast<int>(i));
    for (EdgeIdx e : adh.edges) {
      if (f.count(e)) {
        cut_tree_edge[i] = 1;
        break;
      }
    }
  }
  auto label = tree_components(d.node_count, d.tree_edges, cut_tree_edge);
  int comp_count = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<int>> comps(comp_count);
  for (int t = 0; t < d.node_count; ++t) comps[label[t]].push_back(t);

  std::vector<std::vector<int>> out;
  for (const auto& comp : comps) {
    int inside = 0;
    for (int t : comp) inside += part_in_c[t];
    if (inside == 0) continue;
    if (inside != static_cast<int>(comp.size())) {
      throw Error("internal", "tree component mixes region and non-region parts");
    }
    out.push_back(comp);
  }
  return out;
}

}  // namespace edgecut
