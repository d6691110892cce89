#include "edgecut/fin_sep_tree.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "edgecut/mincut.hpp"

namespace edgecut {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

std::vector<int> bfs_dist(const MultiGraph& g, Vertex from, const std::vector<char>& removed) {
  std::vector<int> dist(g.vertex_count(), kInf);
  dist[from] = 0;
  std::deque<Vertex> queue{from};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (EdgeIdx e : g.incident(u)) {
      if (!removed.empty() && removed[e]) continue;
      Vertex w = g.other_end(e, u);
      if (dist[w] == kInf) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// The growth procedure itself, on a connected graph.
SpanningTreeCertificate grow(const MultiGraph& g, Vertex root) {
  if (!g.connected()) {
    throw Error("disconnected", "finitely_separating_spanning_tree requires connected G");
  }
  int n = g.vertex_count();
  SpanningTreeCertificate cert;
  cert.root = root;

  std::vector<char> removed(g.edge_count(), 0);
  std::vector<char> in_tree(n, 0);
  in_tree[root] = 1;
  std::vector<Vertex> tree_vertices{root};

  while (static_cast<int>(tree_vertices.size()) < n) {
    Vertex target = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_tree[v]) {
        target = v;
        break;
      }
    }

    // Shortest tree-to-target path, lexicographically least vertex sequence:
    // start at the smallest tree vertex of minimal distance, then always
    // step to the smallest neighbour strictly closer to the target.
    auto dist = bfs_dist(g, target, removed);
    Vertex start = -1;
    int best = kInf;
    for (Vertex v = 0; v < n; ++v) {
      if (in_tree[v] && dist[v] < best) {
        best = dist[v];
        start = v;
      }
    }
    if (start == -1 || best == kInf) {
      throw Error("internal", "surviving graph lost connectivity");
    }
    std::vector<Vertex> path{start};
    Vertex cur = start;
    while (dist[cur] > 0) {
      Vertex next = -1;
      for (EdgeIdx e : g.incident(cur)) {
        if (removed[e]) continue;
        Vertex w = g.other_end(e, cur);
        if (dist[w] == dist[cur] - 1 && (next == -1 || w < next)) next = w;
      }
      path.push_back(next);
      cur = next;
    }

    EdgeIdx chosen = -1;
    for (EdgeIdx e : g.incident(path[0])) {
      if (!removed[e] && g.other_end(e, path[0]) == path[1]) {
        chosen = e;
        break;
      }
    }

    std::vector<Vertex> tail(path.begin() + 1, path.end());
    Bond bond = finite_bond_separating(g, tree_vertices, tail, removed);
    bool chosen_in_bond = std::binary_search(bond.edges.begin(), bond.edges.end(), chosen);
    if (!chosen_in_bond) throw Error("internal", "chosen edge missing from step bond");

    for (EdgeIdx f : bond.edges) {
      if (f != chosen) removed[f] = 1;
    }
    in_tree[path[1]] = 1;
    tree_vertices.push_back(path[1]);
    std::sort(tree_vertices.begin(), tree_vertices.end());
    cert.tree_edges.push_back(chosen);

    SpanningStep step;
    step.chosen_edge = chosen;
    step.bond = bond;
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
      if (removed[e]) step.excluded_after.push_back(e);
    }
    cert.steps.push_back(std::move(step));
  }
  if (!cert.steps.empty()) cert.final_excluded = cert.steps.back().excluded_after;
  return cert;
}

// Biconnected components as edge groups (bridges are their own groups),
// iterative lowpoint DFS; parallel edges count as cycles.
std::vector<std::vector<EdgeIdx>> biconnected_edge_groups(const MultiGraph& g) {
  int n = g.vertex_count();
  std::vector<int> num(n, -1), low(n, 0);
  std::vector<std::vector<EdgeIdx>> groups;
  std::vector<EdgeIdx> edge_stack;
  int counter = 0;

  struct Frame {
    Vertex v;
    EdgeIdx via;
    size_t next_inc;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (num[s] != -1) continue;
    std::vector<Frame> stack{{s, -1, 0}};
    num[s] = low[s] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_inc < g.incident(f.v).size()) {
        EdgeIdx e = g.incident(f.v)[f.next_inc++];
        if (e == f.via) continue;  // skip only the tree-edge instance
        Vertex w = g.other_end(e, f.v);
        if (num[w] == -1) {
          edge_stack.push_back(e);
          num[w] = low[w] = counter++;
          stack.push_back({w, e, 0});
        } else if (num[w] < num[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] >= num[parent]) {
            // parent is a cut vertex (or root): pop one block
            std::vector<EdgeIdx> group;
            while (true) {
              EdgeIdx e = edge_stack.back();
              edge_stack.pop_back();
              group.push_back(e);
              if (e == done.via) break;
            }
            std::sort(group.begin(), group.end());
            groups.push_back(std::move(group));
          }
        }
      }
    }
  }
  std::sort(groups.begin(), groups.end());
  return groups;
}

}  // namespace

SpanningTreeCertificate finitely_separating_spanning_tree(const MultiGraph& g, Vertex root,
                                                          bool use_block_reduction) {
  if (root < 0 || root >= g.vertex_count()) throw Error("unknownvertex", "bad root vertex");
  if (!use_block_reduction) return grow(g, root);

  if (!g.connected()) {
    throw Error("disconnected", "finitely_separating_spanning_tree requires connected G");
  }
  SpanningTreeCertificate cert;
  cert.root = root;
  std::vector<char> removed(g.edge_count(), 0);

  for (const auto& group : biconnected_edge_groups(g)) {
    // Materialize the block with fresh indices, keeping vertex names; run
    // the procedure inside it, then map everything back.
    std::vector<std::pair<std::string, std::string>> pairs;
    for (EdgeIdx e : group) {
      auto [u, v] = g.endpoints(e);
      pairs.emplace_back(g.vertex_name(u), g.vertex_name(v));
    }
    MultiGraph block = MultiGraph::build(pairs);
    SpanningTreeCertificate local = grow(block, 0);

    for (size_t i = 0; i < local.steps.size(); ++i) {
      const SpanningStep& ls = local.steps[i];
      SpanningStep step;
      step.chosen_edge = group[ls.chosen_edge];
      cert.tree_edges.push_back(step.chosen_edge);
      for (EdgeIdx be : ls.bond.edges) step.bond.edges.push_back(group[be]);
      std::sort(step.bond.edges.begin(), step.bond.edges.end());
      for (EdgeIdx f : step.bond.edges) {
        if (f != step.chosen_edge) removed[f] = 1;
      }
      // A block bond splits the whole surviving graph in two as well; the
      // sides are recomputed globally so the stored cut is a cut of G_n.
      std::vector<EdgeIdx> gone;
      for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
        if (removed[e] || e == step.chosen_edge) gone.push_back(e);
      }
      auto comps = components_after_deletion(g, gone);
      if (comps.size() != 2) throw Error("internal", "block bond does not split G_n in two");
      // side_a: the component holding the block's tree side (root of block).
      Vertex block_root = g.vertex(block.vertex_name(0));
      int a_idx = std::binary_search(comps[0].vertices.begin(), comps[0].vertices.end(), block_root)
                      ? 0
                      : 1;
      step.bond.side_a = comps[a_idx].vertices;
      step.bond.side_b = comps[1 - a_idx].vertices;
      for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
        if (removed[e]) step.excluded_after.push_back(e);
      }
      cert.steps.push_back(std::move(step));
    }
  }
  if (!cert.steps.empty()) cert.final_excluded = cert.steps.back().excluded_after;
  return cert;
}

Cut fundamental_cut(const MultiGraph& g, const std::vector<EdgeIdx>& tree_edges, EdgeIdx e) {
  if (std::find(tree_edges.begin(), tree_edges.end(), e) == tree_edges.end()) {
    throw Error("notreeedge", "edge is not a tree edge");
  }
  std::vector<char> removed(g.edge_count(), 1);
  for (EdgeIdx t : tree_edges) removed[t] = 0;
  removed[e] = 1;
  auto label = g.component_labels(removed);
  if (*std::max_element(label.begin(), label.end()) != 1) {
    throw Error("notreeedge", "tree edge set does not form a spanning tree");
  }
  auto [u, v] = g.endpoints(e);
  Vertex anchor = std::min(u, v);
  std::vector<Vertex> side;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (label[x] == label[anchor]) side.push_back(x);
  }
  return cut_from_side(g, side);
}

std::string replay_certificate(const MultiGraph& g, const SpanningTreeCertificate& cert) {
  int n = g.vertex_count();
  if (static_cast<int>(cert.tree_edges.size()) != n - 1) return "tree edge count is not n-1";

  std::vector<EdgeIdx> excluded_before;  // E_{n-1}
  std::vector<char> removed(g.edge_count(), 0);
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const SpanningStep& step = cert.steps[i];
    if (step.chosen_edge != cert.tree_edges[i]) return "step/tree edge order mismatch";
    if (!bond_is_valid(g, step.bond, removed)) {
      return "step " + std::to_string(i) + ": F_n is not a bond of G_{n-1}";
    }
    if (!std::binary_search(step.bond.edges.begin(), step.bond.edges.end(), step.chosen_edge)) {
      return "step " + std::to_string(i) + ": e_n not in F_n";
    }
    std::vector<EdgeIdx> expect = excluded_before;
    for (EdgeIdx f : step.bond.edges) {
      if (f != step.chosen_edge) expect.push_back(f);
    }
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    if (expect != step.excluded_after) {
      return "step " + std::to_string(i) + ": E_n bookkeeping broken";
    }
    for (EdgeIdx f : step.excluded_after) removed[f] = 1;

    auto label = g.component_labels(removed);
    if (*std::max_element(label.begin(), label.end()) != 0) {
      return "step " + std::to_string(i) + ": G_n disconnected";
    }
    removed[step.chosen_edge] = 1;
    auto split = g.component_labels(removed);
    removed[step.chosen_edge] = 0;
    if (*std::max_element(split.begin(), split.end()) != 1) {
      return "step " + std::to_string(i) + ": e_n is not a bridge of G_n";
    }
    excluded_before = step.excluded_after;
  }

  // Final tree must be spanning, acyclic, and disjoint from the exclusions.
  std::vector<char> non_tree(g.edge_count(), 1);
  for (EdgeIdx t : cert.tree_edges) non_tree[t] = 0;
  auto tree_label = g.component_labels(non_tree);
  if (*std::max_element(tree_label.begin(), tree_label.end()) != 0) return "tree is not spanning";
  for (EdgeIdx f : cert.final_excluded) {
    if (!non_tree[f]) return "excluded edge lies on the tree";
  }

  // Containment replay: fundamental cut of e_n inside E_n + e_n, and the
  // tree split matches the G_n - e_n split.
  std::vector<char> removed_n(g.edge_count(), 0);
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const SpanningStep& step = cert.steps[i];
    Cut fc = fundamental_cut(g, cert.tree_edges, step.chosen_edge);
    std::set<EdgeIdx> allowed(step.excluded_after.begin(), step.excluded_after.end());
    allowed.insert(step.chosen_edge);
    for (EdgeIdx e : fc.edges) {
      if (!allowed.count(e)) {
        return "step " + std::to_string(i) + ": fundamental cut escapes E_n + e_n";
      }
    }
    std::fill(removed_n.begin(), removed_n.end(), 0);
    for (EdgeIdx f : step.excluded_after) removed_n[f] = 1;
    removed_n[step.chosen_edge] = 1;
    auto split = g.component_labels(removed_n);
    std::vector<Vertex> c_anchor_side;
    auto [u, v] = g.endpoints(step.chosen_edge);
    Vertex anchor = std::min(u, v);
    for (Vertex x = 0; x < n; ++x) {
      if (split[x] == split[anchor]) c_anchor_side.push_back(x);
    }
    if (c_anchor_side != fc.side_a) {
      return "step " + std::to_string(i) + ": tree components differ from G_n - e_n components";
    }
  }
  return "";
}

}  // namespace edgecut
