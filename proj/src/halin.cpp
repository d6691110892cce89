#include "edgecut/halin.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace edgecut {

namespace {

// Vertex-splitting flow network for the fan computation. Every non-W vertex
// except the center gets a unit in->out lane; every W vertex is a leaf node
// feeding the sink with unit capacity (leaves are distinct and flow never
// passes through W); the center is the source with unbounded throughput.
struct FanNet {
  int source = -1;
  int sink = -1;
  std::vector<int> in_node, out_node;  // per graph vertex; -1 = absent
  std::vector<int> arc_to;
  std::vector<int> cap;      // residual
  std::vector<int> orig;     // original capacity
  std::vector<EdgeIdx> via;  // graph edge carried by this arc, or -1
  std::vector<std::vector<int>> out_arcs;

  int add_node() {
    out_arcs.emplace_back();
    return static_cast<int>(out_arcs.size()) - 1;
  }
  void add_arc(int u, int v, int c, EdgeIdx edge) {
    arc_to.push_back(v);
    cap.push_back(c);
    orig.push_back(c);
    via.push_back(edge);
    out_arcs[u].push_back(static_cast<int>(arc_to.size()) - 1);
    arc_to.push_back(u);
    cap.push_back(0);
    orig.push_back(0);
    via.push_back(edge);
    out_arcs[v].push_back(static_cast<int>(arc_to.size()) - 1);
  }

  int max_flow(int limit) {
    int total = 0;
    std::vector<int> pred(out_arcs.size());
    while (total < limit) {
      std::fill(pred.begin(), pred.end(), -1);
      pred[source] = -2;
      std::deque<int> queue{source};
      while (!queue.empty() && pred[sink] == -1) {
        int u = queue.front();
        queue.pop_front();
        for (int a : out_arcs[u]) {
          if (cap[a] > 0 && pred[arc_to[a]] == -1) {
            pred[arc_to[a]] = a;
            queue.push_back(arc_to[a]);
          }
        }
      }
      if (pred[sink] == -1) break;
      for (int n = sink; n != source;) {
        int a = pred[n];
        cap[a] -= 1;
        cap[a ^ 1] += 1;
        n = arc_to[a ^ 1];
      }
      ++total;
    }
    return total;
  }
};

}  // namespace

std::vector<Vertex> star_interior(const ExternalStar& s) {
  std::vector<Vertex> interior{s.center};
  for (const Path& p : s.branches) {
    for (size_t i = 1; i + 1 < p.vertices.size(); ++i) interior.push_back(p.vertices[i]);
  }
  std::sort(interior.begin(), interior.end());
  interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
  return interior;
}

bool star_is_valid(const MultiGraph& g, const std::vector<Vertex>& w, int k,
                   const ExternalStar& s) {
  std::set<Vertex> w_set(w.begin(), w.end());
  if (w_set.count(s.center)) return false;
  if (static_cast<int>(s.branches.size()) != k) return false;
  if (static_cast<int>(s.attachment.size()) != k) return false;
  std::set<Vertex> leaves(s.attachment.begin(), s.attachment.end());
  if (static_cast<int>(leaves.size()) != k) return false;

  std::set<Vertex> interior_seen;
  std::set<Vertex> leaf_seen;
  for (const Path& p : s.branches) {
    if (p.vertices.size() < 2 || p.vertices.size() != p.edges.size() + 1) return false;
    if (p.vertices.front() != s.center) return false;
    Vertex leaf = p.vertices.back();
    if (!w_set.count(leaf) || !leaves.count(leaf) || !leaf_seen.insert(leaf).second) return false;
    for (size_t i = 0; i < p.edges.size(); ++i) {
      auto [a, b] = g.endpoints(p.edges[i]);
      if (!((a == p.vertices[i] && b == p.vertices[i + 1]) ||
            (b == p.vertices[i] && a == p.vertices[i + 1]))) {
        return false;
      }
    }
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      Vertex x = p.vertices[i];
      if (w_set.count(x)) return false;  // interior avoids W
      if (i > 0 && (x == s.center || !interior_seen.insert(x).second)) return false;
    }
  }
  return true;
}

std::optional<ExternalStar> external_star(const MultiGraph& g, const std::vector<Vertex>& w,
                                          Vertex v, int k,
                                          const std::vector<Vertex>& forbidden_interior) {
  if (k < 1) throw Error("badk", "external_star requires k >= 1");
  std::set<Vertex> w_set(w.begin(), w.end());
  if (w_set.count(v)) throw Error("centerinW", "star center must lie outside W");
  std::set<Vertex> forbidden(forbidden_interior.begin(), forbidden_interior.end());
  if (forbidden.count(v)) return std::nullopt;

  FanNet net;
  net.source = net.add_node();
  net.sink = net.add_node();
  net.in_node.assign(g.vertex_count(), -1);
  net.out_node.assign(g.vertex_count(), -1);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (x == v) {
      net.in_node[x] = -1;  // never re-entered
      net.out_node[x] = net.source;
    } else if (w_set.count(x)) {
      int leaf = net.add_node();
      net.in_node[x] = leaf;
      net.add_arc(leaf, net.sink, 1, -1);
    } else if (!forbidden.count(x)) {
      int in = net.add_node();
      int out = net.add_node();
      net.in_node[x] = in;
      net.out_node[x] = out;
      net.add_arc(in, out, 1, -1);
    }
  }
  for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    if (net.out_node[a] != -1 && net.in_node[b] != -1) {
      net.add_arc(net.out_node[a], net.in_node[b], 1, e);
    }
    if (net.out_node[b] != -1 && net.in_node[a] != -1) {
      net.add_arc(net.out_node[b], net.in_node[a], 1, e);
    }
  }

  if (net.max_flow(k) < k) return std::nullopt;

  // Peel k branch walks along flow-carrying forward arcs (BFS per unit, so
  // stray circulations are ignored).
  std::vector<int> flow(net.arc_to.size(), 0);
  for (size_t a = 0; a < net.arc_to.size(); a += 2) flow[a] = net.orig[a] - net.cap[a];

  ExternalStar star;
  star.center = v;
  std::vector<int> node_vertex(net.out_arcs.size(), -1);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (net.in_node[x] != -1) node_vertex[net.in_node[x]] = x;
  }
  for (int unit = 0; unit < k; ++unit) {
    std::vector<int> pred(net.out_arcs.size(), -1);
    pred[net.source] = -2;
    std::deque<int> queue{net.source};
    while (!queue.empty() && pred[net.sink] == -1) {
      int u = queue.front();
      queue.pop_front();
      for (int a : net.out_arcs[u]) {
        if (a % 2 == 0 && flow[a] > 0 && pred[net.arc_to[a]] == -1) {
          pred[net.arc_to[a]] = a;
          queue.push_back(net.arc_to[a]);
        }
      }
    }
    if (pred[net.sink] == -1) throw Error("internal", "fan decomposition stuck");
    std::vector<int> arcs;
    for (int n = net.sink; n != net.source;) {
      int a = pred[n];
      flow[a] -= 1;
      arcs.push_back(a);
      n = net.arc_to[a ^ 1];
    }
    std::reverse(arcs.begin(), arcs.end());
    Path branch;
    branch.vertices.push_back(v);
    for (int a : arcs) {
      if (net.via[a] == -1) continue;  // internal or leaf->sink arc
      branch.edges.push_back(net.via[a]);
      branch.vertices.push_back(node_vertex[net.arc_to[a]]);
    }
    star.attachment.push_back(branch.vertices.back());
    star.branches.push_back(std::move(branch));
  }
  std::sort(star.attachment.begin(), star.attachment.end());
  if (!star_is_valid(g, w, k, star)) throw Error("internal", "fan produced an invalid star");
  return star;
}

std::vector<ExternalStar> maximal_star_packing(const MultiGraph& g, const std::vector<Vertex>& w,
                                               int k) {
  std::set<Vertex> w_set(w.begin(), w.end());
  std::vector<ExternalStar> packing;
  std::vector<Vertex> forbidden;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (w_set.count(v)) continue;
    auto star = external_star(g, w, v, k, forbidden);
    if (!star) continue;
    auto interior = star_interior(*star);
    forbidden.insert(forbidden.end(), interior.begin(), interior.end());
    packing.push_back(std::move(*star));
  }
  return packing;
}

SubdivisionSearch find_kkm_subdivision(const MultiGraph& g, int k, int m, int seed_size) {
  if (k < 1 || m < 1) throw Error("badk", "find_kkm_subdivision requires k, m >= 1");
  if (seed_size < 1) throw Error("badk", "seed_size must be >= 1");

  SubdivisionSearch result;
  std::vector<Vertex> u;  // U_{i-1}, sorted
  for (Vertex v = 0; v < std::min(seed_size, g.vertex_count()); ++v) u.push_back(v);

  while (true) {
    ++result.rounds;
    auto packing = maximal_star_packing(g, u, k);

    // Pigeonhole scan: group this round's stars by exact attachment set.
    std::map<std::vector<Vertex>, std::vector<const ExternalStar*>> groups;
    for (const auto& star : packing) groups[star.attachment].push_back(&star);
    for (auto& [attachment, stars] : groups) {
      if (static_cast<int>(stars.size()) < m) continue;
      std::sort(stars.begin(), stars.end(),
                [](const ExternalStar* a, const ExternalStar* b) { return a->center < b->center; });
      Subdivision sub;
      sub.k = k;
      sub.m = m;
      sub.hubs = attachment;
      for (int c = 0; c < m; ++c) {
        sub.centers.push_back(stars[c]->center);
        std::vector<Path> row(k);
        for (const Path& branch : stars[c]->branches) {
          auto it = std::lower_bound(sub.hubs.begin(), sub.hubs.end(), branch.vertices.back());
          row[it - sub.hubs.begin()] = branch;
        }
        sub.spokes.push_back(std::move(row));
      }
      if (!validate_subdivision(g, sub)) {
        throw Error("internal", "assembled subdivision failed validation");
      }
      result.found = std::move(sub);
      return result;
    }

    // U_i := U_{i-1} with all packed star vertices added.
    std::set<Vertex> grown(u.begin(), u.end());
    for (const auto& star : packing) {
      for (const Path& branch : star.branches) {
        grown.insert(branch.vertices.begin(), branch.vertices.end());
      }
    }
    if (grown.size() == u.size()) return result;  // stabilized without a hit
    u.assign(grown.begin(), grown.end());
  }
}

bool validate_subdivision(const MultiGraph& g, const Subdivision& s) {
  if (s.k < 1 || s.m < 1) return false;
  if (static_cast<int>(s.hubs.size()) != s.k) return false;
  if (static_cast<int>(s.centers.size()) != s.m) return false;
  if (static_cast<int>(s.spokes.size()) != s.m) return false;

  std::set<Vertex> branch_vertices(s.hubs.begin(), s.hubs.end());
  if (static_cast<int>(branch_vertices.size()) != s.k) return false;
  for (Vertex c : s.centers) {
    if (!branch_vertices.insert(c).second) return false;  // centers distinct, off the hubs
  }

  std::set<Vertex> internal_seen;
  for (int c = 0; c < s.m; ++c) {
    if (static_cast<int>(s.spokes[c].size()) != s.k) return false;
    for (int h = 0; h < s.k; ++h) {
      const Path& p = s.spokes[c][h];
      if (p.vertices.size() < 2 || p.vertices.size() != p.edges.size() + 1) return false;
      if (p.vertices.front() != s.centers[c]) return false;
      if (p.vertices.back() != s.hubs[h]) return false;
      for (size_t i = 0; i < p.edges.size(); ++i) {
        if (p.edges[i] < 0 || p.edges[i] >= g.edge_count()) return false;
        auto [a, b] = g.endpoints(p.edges[i]);
        if (!((a == p.vertices[i] && b == p.vertices[i + 1]) ||
              (b == p.vertices[i] && a == p.vertices[i + 1]))) {
          return false;
        }
      }
      for (size_t i = 1; i + 1 < p.vertices.size(); ++i) {
        Vertex x = p.vertices[i];
        // internal vertices are fresh: not hubs, not centers, not reused
        if (branch_vertices.count(x)) return false;
        if (!internal_seen.insert(x).second) return false;
      }
    }
  }
  return true;
}

}  // namespace edgecut
