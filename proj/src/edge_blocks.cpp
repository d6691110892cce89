#include "edgecut/edge_blocks.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace edgecut {

int GomoryHuTree::path_min(Vertex u, Vertex v) const {
  if (u == v) throw Error("samevertex", "path_min requires distinct vertices");
  int n = graph->vertex_count();
  std::vector<std::vector<int>> at(n);  // tree edge indices per vertex
  for (size_t i = 0; i < edges.size(); ++i) {
    at[edges[i][0]].push_back(static_cast<int>(i));
    at[edges[i][1]].push_back(static_cast<int>(i));
  }
  // DFS from u tracking the minimum weight seen.
  std::vector<int> best(n, -1);
  std::vector<Vertex> stack{u};
  best[u] = std::numeric_limits<int>::max();
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (int i : at[x]) {
      Vertex y = edges[i][0] == x ? edges[i][1] : edges[i][0];
      if (best[y] == -1) {
        best[y] = std::min(best[x], weights[i]);
        stack.push_back(y);
      }
    }
  }
  if (best[v] == -1) throw Error("internal", "gomory-hu tree is not spanning");
  return best[v];
}

int block_of(const BlockPartition& p, Vertex v) {
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    if (std::binary_search(p.blocks[i].begin(), p.blocks[i].end(), v)) {
      return static_cast<int>(i);
    }
  }
  throw Error("unknownvertex", "vertex not covered by block partition");
}

int local_edge_connectivity(const MultiGraph& g, Vertex u, Vertex v) {
  if (u == v) throw Error("samevertex", "local_edge_connectivity requires u != v");
  return min_edge_cut(g, u, v).value;
}

GomoryHuTree gomory_hu(const MultiGraph& g) {
  if (!g.connected()) throw Error("disconnected", "gomory_hu requires a connected graph");
  int n = g.vertex_count();
  GomoryHuTree tree;
  tree.graph = &g;
  if (n <= 1) return tree;

  std::vector<Vertex> parent(n, 0);
  std::vector<int> weight(n, 0);
  for (Vertex s = 1; s < n; ++s) {
    Vertex t = parent[s];
    CutCertificate cert = min_edge_cut(g, s, t);
    std::vector<char> on_s_side(n, 0);
    for (Vertex v : cert.cut.side_a) on_s_side[v] = 1;

    weight[s] = cert.value;
    for (Vertex v = 1; v < n; ++v) {
      if (v != s && on_s_side[v] && parent[v] == t) parent[v] = s;
    }
    // Gusfield's cut-tree step: if t's parent landed on s's side, s takes
    // t's place below it and t hangs off s.
    if (t != 0 && on_s_side[parent[t]]) {
      parent[s] = parent[t];
      parent[t] = s;
      weight[s] = weight[t];
      weight[t] = cert.value;
    }
  }

  for (Vertex v = 1; v < n; ++v) {
    tree.edges.push_back({v, parent[v]});
    tree.weights.push_back(weight[v]);
  }

  // Store the cut realized by each tree edge's fundamental bipartition.
  std::vector<std::vector<int>> at(n);
  for (size_t i = 0; i < tree.edges.size(); ++i) {
    at[tree.edges[i][0]].push_back(static_cast<int>(i));
    at[tree.edges[i][1]].push_back(static_cast<int>(i));
  }
  for (size_t i = 0; i < tree.edges.size(); ++i) {
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{tree.edges[i][0]};
    seen[tree.edges[i][0]] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (int j : at[x]) {
        if (j == static_cast<int>(i)) continue;
        Vertex y = tree.edges[j][0] == x ? tree.edges[j][1] : tree.edges[j][0];
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::vector<Vertex> side;
    for (Vertex v = 0; v < n; ++v) {
      if (seen[v]) side.push_back(v);
    }
    tree.cuts.push_back(cut_from_side(g, side));
  }
  return tree;
}

BlockPartition k_edge_blocks(const MultiGraph& g, const GomoryHuTree& tree, int k) {
  if (k < 1) throw Error("badk", "k_edge_blocks requires k >= 1");
  int n = g.vertex_count();
  std::vector<int> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&rep](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  for (size_t i = 0; i < tree.edges.size(); ++i) {
    if (tree.weights[i] >= k) {
      int a = find(tree.edges[i][0]);
      int b = find(tree.edges[i][1]);
      if (a != b) rep[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Vertex>> by_root(n);
  for (Vertex v = 0; v < n; ++v) by_root[find(v)].push_back(v);
  BlockPartition part;
  part.k = k;
  for (auto& blk : by_root) {
    if (!blk.empty()) part.blocks.push_back(std::move(blk));
  }
  return part;
}

BlockPartition k_edge_blocks(const MultiGraph& g, int k) {
  if (k < 1) throw Error("badk", "k_edge_blocks requires k >= 1");
  return k_edge_blocks(g, gomory_hu(g), k);
}

}  // namespace edgecut
