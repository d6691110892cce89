#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

namespace edgecut::oracle {

namespace {

bool separated(const MultiGraph& g, Vertex s, Vertex t, unsigned removed_mask) {
  std::vector<char> removed(g.edge_count(), 0);
  for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
    if (removed_mask & (1u << e)) removed[e] = 1;
  }
  auto label = g.component_labels(removed);
  return label[s] != label[t];
}

}  // namespace

int min_cut_by_subsets(const MultiGraph& g, Vertex s, Vertex t) {
  int best = g.edge_count();
  for (unsigned mask = 0; mask < (1u << g.edge_count()); ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    if (separated(g, s, t, mask)) best = size;
  }
  return best;
}

int min_cut_by_bipartitions(const MultiGraph& g, Vertex s, Vertex t) {
  int n = g.vertex_count();
  int best = g.edge_count() + 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & (1u << s)) || (mask & (1u << t))) continue;
    int crossing = 0;
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.endpoints(e);
      if (((mask >> u) & 1) != ((mask >> v) & 1)) ++crossing;
    }
    best = std::min(best, crossing);
  }
  return best;
}

int min_cut_sets_by_bipartitions(const MultiGraph& g, const std::vector<Vertex>& a,
                                 const std::vector<Vertex>& b) {
  int n = g.vertex_count();
  int best = g.edge_count() + 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (Vertex v : a) {
      if (!(mask & (1u << v))) ok = false;
    }
    for (Vertex v : b) {
      if (mask & (1u << v)) ok = false;
    }
    if (!ok) continue;
    int crossing = 0;
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.endpoints(e);
      if (((mask >> u) & 1) != ((mask >> v) & 1)) ++crossing;
    }
    best = std::min(best, crossing);
  }
  return best;
}

bool is_bond_by_enumeration(const MultiGraph& g, const std::vector<EdgeIdx>& f) {
  int n = g.vertex_count();
  std::set<std::set<EdgeIdx>> cuts;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::set<EdgeIdx> crossing;
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.endpoints(e);
      if (((mask >> u) & 1) != ((mask >> v) & 1)) crossing.insert(e);
    }
    if (!crossing.empty()) cuts.insert(std::move(crossing));
  }
  std::set<EdgeIdx> fs(f.begin(), f.end());
  if (fs.empty() || !cuts.count(fs)) return false;
  for (const auto& cut : cuts) {
    if (cut != fs && std::includes(fs.begin(), fs.end(), cut.begin(), cut.end())) {
      return false;  // a proper nonempty sub-cut exists
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> k_blocks_by_all_pairs(const MultiGraph& g, int k,
                                                       bool* already_transitive) {
  int n = g.vertex_count();
  std::vector<std::vector<char>> related(n, std::vector<char>(n, 0));
  for (Vertex u = 0; u < n; ++u) {
    related[u][u] = 1;
    for (Vertex v = u + 1; v < n; ++v) {
      related[u][v] = related[v][u] = min_cut_by_bipartitions(g, u, v) >= k;
    }
  }
  if (already_transitive) {
    *already_transitive = true;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        for (Vertex c = 0; c < n; ++c) {
          if (related[a][b] && related[b][c] && !related[a][c]) *already_transitive = false;
        }
      }
    }
  }
  std::vector<int> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&rep](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (related[u][v]) {
        int a = find(u), b = find(v);
        if (a != b) rep[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<std::vector<Vertex>> blocks(n);
  for (Vertex v = 0; v < n; ++v) blocks[find(v)].push_back(v);
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                              [](const std::vector<Vertex>& b) { return b.empty(); }),
               blocks.end());
  return blocks;
}

namespace {

struct KkmSearch {
  const MultiGraph* g;
  std::vector<Vertex> hubs, centers;
  std::vector<char> used;  // internal vertices claimed so far

  bool place_paths(int pair_index) {
    int k = static_cast<int>(hubs.size());
    if (pair_index == k * static_cast<int>(centers.size())) return true;
    Vertex from = centers[pair_index / k];
    Vertex to = hubs[pair_index % k];
    std::vector<Vertex> walk{from};
    return extend(walk, to, pair_index);
  }

  bool extend(std::vector<Vertex>& walk, Vertex to, int pair_index) {
    Vertex cur = walk.back();
    for (EdgeIdx e : g->incident(cur)) {
      Vertex next = g->other_end(e, cur);
      if (next == to) {
        if (place_paths(pair_index + 1)) return true;
        continue;
      }
      if (used[next]) continue;
      bool branch_vertex = std::find(hubs.begin(), hubs.end(), next) != hubs.end() ||
                           std::find(centers.begin(), centers.end(), next) != centers.end();
      if (branch_vertex) continue;
      used[next] = 1;
      walk.push_back(next);
      if (extend(walk, to, pair_index)) return true;
      walk.pop_back();
      used[next] = 0;
    }
    return false;
  }
};

}  // namespace

bool has_kkm_subdivision(const MultiGraph& g, int k, int m) {
  int n = g.vertex_count();
  if (k + m > n) return false;
  std::vector<Vertex> verts(n);
  std::iota(verts.begin(), verts.end(), 0);

  std::vector<char> pick_hub(n, 0);
  std::fill(pick_hub.begin(), pick_hub.begin() + k, 1);
  std::sort(pick_hub.begin(), pick_hub.end());
  do {
    std::vector<Vertex> hubs, rest;
    for (Vertex v = 0; v < n; ++v) (pick_hub[v] ? hubs : rest).push_back(v);
    std::vector<char> pick_center(rest.size(), 0);
    std::fill(pick_center.begin(), pick_center.begin() + m, 1);
    std::sort(pick_center.begin(), pick_center.end());
    do {
      KkmSearch search;
      search.g = &g;
      search.hubs = hubs;
      for (size_t i = 0; i < rest.size(); ++i) {
        if (pick_center[i]) search.centers.push_back(rest[i]);
      }
      search.used.assign(n, 0);
      if (search.place_paths(0)) return true;
    } while (std::next_permutation(pick_center.begin(), pick_center.end()));
  } while (std::next_permutation(pick_hub.begin(), pick_hub.end()));
  return false;
}

bool is_k_connected(const MultiGraph& g, int k) {
  int n = g.vertex_count();
  if (n <= k) return false;
  if (!g.connected()) return false;
  if (k <= 0) return true;
  // no subset of fewer than k vertices disconnects (or trivializes) G
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size >= k || size == 0) continue;
    std::vector<char> gone(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      if (mask & (1u << v)) gone[v] = 1;
    }
    Vertex start = -1;
    int alive = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!gone[v]) {
        ++alive;
        if (start < 0) start = v;
      }
    }
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (EdgeIdx e : g.incident(u)) {
        Vertex w = g.other_end(e, u);
        if (!gone[w] && !seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != alive) return false;
  }
  return true;
}

MultiGraph random_connected_multigraph(std::mt19937& rng, int max_vertices, int max_edges) {
  std::uniform_int_distribution<int> nd(2, max_vertices);
  int n = nd(rng);
  std::vector<std::pair<std::string, std::string>> pairs;
  auto name = [](int i) { return "v" + std::to_string(i); };
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pd(0, v - 1);
    pairs.emplace_back(name(pd(rng)), name(v));
  }
  std::uniform_int_distribution<int> md(n - 1, max_edges);
  int m = md(rng);
  std::uniform_int_distribution<int> vd(0, n - 1);
  while (static_cast<int>(pairs.size()) < m) {
    int u = vd(rng), v = vd(rng);
    if (u == v) continue;
    pairs.emplace_back(name(u), name(v));
  }
  return MultiGraph::build(pairs);
}

void for_each_connected_simple_graph(int max_vertices,
                                     const std::function<void(const MultiGraph&)>& fn) {
  const char* names[] = {"a", "b", "c", "d", "e", "f"};
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<std::pair<std::string, std::string>> pairs;
      for (size_t i = 0; i < slots.size(); ++i) {
        if (mask & (1u << i)) pairs.emplace_back(names[slots[i].first], names[slots[i].second]);
      }
      std::vector<std::string> isolated;
      for (int v = 0; v < n; ++v) isolated.push_back(names[v]);
      MultiGraph g = MultiGraph::build(pairs, isolated);
      if (g.connected()) fn(g);
    }
  }
}

}  // namespace edgecut::oracle
