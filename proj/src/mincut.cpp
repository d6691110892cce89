#include "edgecut/mincut.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace edgecut {

namespace {

// Small augmenting-path solver. Arcs come in pairs: arc 2i and 2i+1 are the
// two directions of lane i; pushing along an arc moves capacity to its twin,
// which handles both undirected unit edges (both directions start at 1) and
// directed helper arcs (reverse starts at 0).
struct FlowNet {
  int node_count = 0;
  std::vector<int> arc_to;            // head per arc
  std::vector<long long> cap;         // residual capacity per arc
  std::vector<std::vector<int>> out;  // arcs leaving each node, insertion order

  int add_node() {
    out.emplace_back();
    return node_count++;
  }

  // Returns the forward arc index.
  int add_lane(int u, int v, long long forward_cap, long long backward_cap) {
    int a = static_cast<int>(arc_to.size());
    arc_to.push_back(v);
    cap.push_back(forward_cap);
    out[u].push_back(a);
    arc_to.push_back(u);
    cap.push_back(backward_cap);
    out[v].push_back(a + 1);
    return a;
  }

  // BFS augmentation until exhaustion (or max_value reached).
  long long max_flow(int s, int t, long long max_value) {
    long long total = 0;
    std::vector<int> pred_arc(node_count);
    while (total < max_value) {
      std::fill(pred_arc.begin(), pred_arc.end(), -1);
      pred_arc[s] = -2;
      std::deque<int> queue{s};
      while (!queue.empty() && pred_arc[t] == -1) {
        int u = queue.front();
        queue.pop_front();
        for (int a : out[u]) {
          int v = arc_to[a];
          if (cap[a] > 0 && pred_arc[v] == -1) {
            pred_arc[v] = a;
            queue.push_back(v);
          }
        }
      }
      if (pred_arc[t] == -1) break;
      long long push = max_value - total;
      for (int v = t; v != s;) {
        int a = pred_arc[v];
        push = std::min(push, cap[a]);
        v = arc_to[a ^ 1];
      }
      for (int v = t; v != s;) {
        int a = pred_arc[v];
        cap[a] -= push;
        cap[a ^ 1] += push;
        v = arc_to[a ^ 1];
      }
      total += push;
    }
    return total;
  }

  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(node_count, 0);
    seen[s] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a : out[u]) {
        if (cap[a] > 0 && !seen[arc_to[a]]) {
          seen[arc_to[a]] = 1;
          stack.push_back(arc_to[a]);
        }
      }
    }
    return seen;
  }
};

FlowNet graph_net(const MultiGraph& g, const std::vector<char>& removed = {}) {
  FlowNet net;
  for (Vertex v = 0; v < g.vertex_count(); ++v) net.add_node();
  for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    bool dead = !removed.empty() && removed[e];
    net.add_lane(u, v, dead ? 0 : 1, dead ? 0 : 1);  // lane index == edge index
  }
  return net;
}

// Net unit flow per graph edge after solving: +1 means u->v, -1 means v->u.
// Lane i for edge i starts with cap 1 in both directions, so the signed net
// is (cap[2i+1] - cap[2i]) / 2.
std::vector<int> edge_net_flow(const FlowNet& net, int edge_count) {
  std::vector<int> flow(edge_count, 0);
  for (EdgeIdx e = 0; e < edge_count; ++e) {
    flow[e] = static_cast<int>((net.cap[2 * e + 1] - net.cap[2 * e]) / 2);
  }
  return flow;
}

// Drops any closed detours so the walk visits each vertex once.
void splice_out_loops(Path& p) {
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    for (size_t j = p.vertices.size(); j-- > i + 1;) {
      if (p.vertices[j] == p.vertices[i]) {
        p.vertices.erase(p.vertices.begin() + i + 1, p.vertices.begin() + j + 1);
        p.edges.erase(p.edges.begin() + i, p.edges.begin() + j);
        break;
      }
    }
  }
}

// Peels `count` unit paths from a net flow, walking tail-to-head and
// consuming each edge once. Flow conservation guarantees a walk never gets
// stuck before reaching a stop vertex; leftover circulations stay unused.
std::vector<Path> peel_paths(const MultiGraph& g, std::vector<int> flow,
                             const std::vector<Vertex>& starts, const std::set<Vertex>& stops,
                             int count) {
  auto flow_tail = [&](EdgeIdx e) {
    auto [u, v] = g.endpoints(e);
    return flow[e] > 0 ? u : v;
  };
  std::vector<Path> paths;
  for (Vertex start : starts) {
    while (static_cast<int>(paths.size()) < count) {
      EdgeIdx first = -1;
      for (EdgeIdx e : g.incident(start)) {
        if (flow[e] != 0 && flow_tail(e) == start) {
          first = e;
          break;
        }
      }
      if (first == -1) break;  // this start is exhausted
      Path p;
      p.vertices.push_back(start);
      Vertex cur = start;
      while (!stops.count(cur)) {
        EdgeIdx next = -1;
        for (EdgeIdx e : g.incident(cur)) {
          if (flow[e] != 0 && flow_tail(e) == cur) {
            next = e;
            break;
          }
        }
        if (next == -1) throw Error("internal", "flow decomposition stuck");
        auto [u, v] = g.endpoints(next);
        Vertex head = flow[next] > 0 ? v : u;
        flow[next] = 0;
        p.edges.push_back(next);
        p.vertices.push_back(head);
        cur = head;
      }
      splice_out_loops(p);
      paths.push_back(std::move(p));
    }
  }
  if (static_cast<int>(paths.size()) != count) {
    throw Error("internal", "path system size disagrees with flow value");
  }
  return paths;
}

}  // namespace

bool certificate_is_valid(const MultiGraph& g, const CutCertificate& cert) {
  if (!cut_is_valid(g, cert.cut)) return false;
  if (static_cast<int>(cert.cut.edges.size()) != cert.value) return false;
  if (static_cast<int>(cert.paths.size()) != cert.value) return false;
  std::set<EdgeIdx> used;
  std::set<EdgeIdx> cut_edges(cert.cut.edges.begin(), cert.cut.edges.end());
  for (const Path& p : cert.paths) {
    if (p.vertices.size() != p.edges.size() + 1) return false;
    bool crosses = false;
    for (size_t i = 0; i < p.edges.size(); ++i) {
      EdgeIdx e = p.edges[i];
      auto [u, v] = g.endpoints(e);
      if (!((u == p.vertices[i] && v == p.vertices[i + 1]) ||
            (v == p.vertices[i] && u == p.vertices[i + 1]))) {
        return false;
      }
      if (!used.insert(e).second) return false;  // edge reused across paths
      if (cut_edges.count(e)) crosses = true;
    }
    if (!crosses) return false;  // every s-t path must cross every s-t cut
  }
  return true;
}

CutCertificate min_edge_cut(const MultiGraph& g, Vertex s, Vertex t) {
  if (s == t) throw Error("samevertex", "min_edge_cut requires s != t");
  FlowNet net = graph_net(g);
  int value = static_cast<int>(net.max_flow(s, t, g.edge_count() + 1));
  auto reach = net.residual_reachable(s);

  CutCertificate cert;
  cert.value = value;
  std::vector<Vertex> side_a;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (reach[v]) side_a.push_back(v);
  }
  cert.cut = cut_from_side(g, side_a);
  if (static_cast<int>(cert.cut.edges.size()) != value) {
    throw Error("internal", "min cut size disagrees with flow value");
  }
  cert.paths = peel_paths(g, edge_net_flow(net, g.edge_count()), {s}, {t}, value);
  return cert;
}

CutCertificate min_cut_between_sets(const MultiGraph& g, const std::vector<Vertex>& set_a,
                                    const std::vector<Vertex>& set_b,
                                    const std::vector<char>& removed_edges) {
  if (set_a.empty() || set_b.empty()) {
    throw Error("emptyset", "min_cut_between_sets requires nonempty sets");
  }
  std::set<Vertex> a(set_a.begin(), set_a.end());
  for (Vertex v : set_b) {
    if (a.count(v)) {
      throw Error("overlap", "A and B overlap at " + g.vertex_name(v));
    }
  }

  FlowNet net = graph_net(g, removed_edges);
  int super_s = net.add_node();
  int super_t = net.add_node();
  long long big = g.edge_count() + 1;
  for (Vertex v : set_a) net.add_lane(super_s, v, big, 0);
  for (Vertex v : set_b) net.add_lane(v, super_t, big, 0);

  int value = static_cast<int>(net.max_flow(super_s, super_t, big));
  auto reach = net.residual_reachable(super_s);

  CutCertificate cert;
  cert.value = value;
  std::vector<Vertex> side_a;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (reach[v]) side_a.push_back(v);
  }
  cert.cut = cut_from_side(g, side_a, removed_edges);
  if (static_cast<int>(cert.cut.edges.size()) != value) {
    throw Error("internal", "min cut size disagrees with flow value");
  }
  cert.paths = peel_paths(g, edge_net_flow(net, g.edge_count()), set_a,
                          std::set<Vertex>(set_b.begin(), set_b.end()), value);
  return cert;
}

Bond finite_bond_separating(const MultiGraph& g, const std::vector<Vertex>& set_a,
                            const std::vector<Vertex>& set_b,
                            const std::vector<char>& removed_edges) {
  {
    auto label = g.component_labels(removed_edges);
    if (g.vertex_count() > 0 && *std::max_element(label.begin(), label.end()) != 0) {
      throw Error("disconnected", "finite_bond_separating requires connected G");
    }
  }
  std::set<Vertex> a(set_a.begin(), set_a.end());
  for (Vertex v : set_b) {
    if (a.count(v)) throw Error("overlap", "A and B overlap at " + g.vertex_name(v));
  }
  auto check_connected = [&](const std::vector<Vertex>& s, const char* which) {
    std::vector<Vertex> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) throw Error("hypothesis", std::string(which) + " must be nonempty");
    if (!induced_connected(g, sorted, removed_edges)) {
      throw Error("hypothesis", std::string(which) + " must induce a connected subgraph");
    }
  };
  check_connected(set_a, "A");
  check_connected(set_b, "B");

  CutCertificate cert = min_cut_between_sets(g, set_a, set_b, removed_edges);

  // Restrict to the boundary of the component of G - cut containing A. For
  // a minimum cut with connected A and B this is the cut itself and both
  // sides are connected; the restriction realizes the minimality argument
  // without an explicit minimalization loop.
  std::vector<EdgeIdx> gone = cert.cut.edges;
  for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
    if (!removed_edges.empty() && removed_edges[e]) gone.push_back(e);
  }
  auto comps = components_after_deletion(g, gone);
  const Region* with_a = nullptr;
  for (const Region& r : comps) {
    if (std::binary_search(r.vertices.begin(), r.vertices.end(), set_a.front())) {
      with_a = &r;
      break;
    }
  }
  Bond bond = cut_from_side(g, with_a->vertices, removed_edges);
  if (!bond_is_valid(g, bond, removed_edges)) {
    throw Error("internal", "extracted minimal cut is not a bond");
  }
  return bond;
}

}  // namespace edgecut
