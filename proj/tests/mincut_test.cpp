#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "edgecut/mincut.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace edgecut;
using testutil::mk;
using testutil::verts;

TEST_CASE("min_edge_cut examples") {
  MultiGraph path = mk({{"a", "b"}, {"b", "c"}});
  auto cert = min_edge_cut(path, path.vertex("a"), path.vertex("c"));
  CHECK(cert.value == 1);
  CHECK(certificate_is_valid(path, cert));

  MultiGraph k4 = testutil::complete(4);
  auto k4cert = min_edge_cut(k4, 0, 3);
  CHECK(k4cert.value == 3);
  CHECK(certificate_is_valid(k4, k4cert));

  CHECK_THROWS_AS(min_edge_cut(path, 0, 0), Error);
}

TEST_CASE("min_edge_cut matches the exhaustive-subset oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    MultiGraph g = oracle::random_connected_multigraph(rng, 6, 9);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      for (Vertex t = s + 1; t < g.vertex_count(); ++t) {
        auto cert = min_edge_cut(g, s, t);
        CHECK(cert.value == oracle::min_cut_by_subsets(g, s, t));
        CHECK(certificate_is_valid(g, cert));
      }
    }
  }
}

TEST_CASE("min_cut_between_sets examples") {
  MultiGraph path = mk({{"a", "b"}, {"b", "c"}, {"c", "d"}});
  auto cert = min_cut_between_sets(path, verts(path, {"a"}), verts(path, {"d"}));
  CHECK(cert.value == 1);

  MultiGraph c4 = testutil::cycle(4);
  auto c4cert = min_cut_between_sets(c4, verts(c4, {"v0"}), verts(c4, {"v2"}));
  CHECK(c4cert.value == 2);

  CHECK_THROWS_AS(min_cut_between_sets(path, verts(path, {"a", "b"}), verts(path, {"b"})), Error);
}

TEST_CASE("min_cut_between_sets matches the contraction oracle") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    MultiGraph g = oracle::random_connected_multigraph(rng, 6, 9);
    int n = g.vertex_count();
    std::uniform_int_distribution<int> vd(0, n - 1);
    std::vector<Vertex> a{vd(rng)};
    std::vector<Vertex> b{vd(rng)};
    while (b[0] == a[0]) b[0] = vd(rng);
    if (n >= 4 && trial % 2 == 0) {
      Vertex extra = vd(rng);
      if (extra != a[0] && extra != b[0]) a.push_back(extra);
    }
    // contraction oracle: collapse A and B to fresh vertices, run s-t cut
    std::vector<std::pair<std::string, std::string>> pairs;
    auto name_of = [&](Vertex v) -> std::string {
      if (std::find(a.begin(), a.end(), v) != a.end()) return "#A";
      if (std::find(b.begin(), b.end(), v) != b.end()) return "#B";
      return g.vertex_name(v);
    };
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.endpoints(e);
      if (name_of(u) == name_of(v)) continue;
      pairs.emplace_back(name_of(u), name_of(v));
    }
    MultiGraph contracted = MultiGraph::build(pairs, {"#A", "#B"});
    auto expect = min_edge_cut(contracted, contracted.vertex("#A"), contracted.vertex("#B"));

    auto cert = min_cut_between_sets(g, a, b);
    CHECK(cert.value == expect.value);
    CHECK(certificate_is_valid(g, cert));
    // A entirely on side_a, B on side_b
    for (Vertex v : a) CHECK(std::binary_search(cert.cut.side_a.begin(), cert.cut.side_a.end(), v));
    for (Vertex v : b) CHECK(std::binary_search(cert.cut.side_b.begin(), cert.cut.side_b.end(), v));
  }
}

TEST_CASE("finite_bond_separating examples") {
  MultiGraph path = mk({{"a", "b"}, {"b", "c"}, {"c", "d"}});
  Bond bond = finite_bond_separating(path, verts(path, {"a", "b"}), verts(path, {"d"}));
  CHECK(bond.edges.size() == 1);
  CHECK(bond_is_valid(path, bond));

  MultiGraph tt = testutil::two_triangles_bridge();
  Bond bridge = finite_bond_separating(tt, verts(tt, {"a0", "a1", "a2"}),
                                       verts(tt, {"b0", "b1", "b2"}));
  REQUIRE(bridge.edges.size() == 1);
  auto [u, v] = tt.endpoints(bridge.edges[0]);
  CHECK(((tt.vertex_name(u) == "a0" && tt.vertex_name(v) == "b0") ||
         (tt.vertex_name(u) == "b0" && tt.vertex_name(v) == "a0")));

  CHECK_THROWS_AS(finite_bond_separating(path, verts(path, {"a", "c"}), verts(path, {"d"})),
                  Error);
  try {
    finite_bond_separating(path, verts(path, {"a", "c"}), verts(path, {"d"}));
  } catch (const Error& e) {
    CHECK(e.code() == "hypothesis");
  }
}

TEST_CASE("finite_bond_separating on random instances") {
  std::mt19937 rng(17);
  int done = 0;
  while (done < 60) {
    MultiGraph g = oracle::random_connected_multigraph(rng, 7, 9);
    int n = g.vertex_count();
    std::uniform_int_distribution<int> vd(0, n - 1);
    // grow small connected A and B
    auto grow = [&](Vertex seed, int want, const std::vector<char>& banned) {
      std::vector<Vertex> out{seed};
      std::vector<char> in(n, 0);
      in[seed] = 1;
      while (static_cast<int>(out.size()) < want) {
        std::vector<Vertex> frontier;
        for (Vertex v : out) {
          for (EdgeIdx e : g.incident(v)) {
            Vertex w = g.other_end(e, v);
            if (!in[w] && !banned[w]) frontier.push_back(w);
          }
        }
        if (frontier.empty()) break;
        Vertex pick = frontier[rng() % frontier.size()];
        in[pick] = 1;
        out.push_back(pick);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    Vertex sa = vd(rng);
    std::vector<char> none(n, 0);
    auto a = grow(sa, 1 + static_cast<int>(rng() % 2), none);
    std::vector<char> banned(n, 0);
    for (Vertex v : a) banned[v] = 1;
    Vertex sb = vd(rng);
    if (banned[sb]) continue;
    auto b = grow(sb, 1 + static_cast<int>(rng() % 2), banned);

    Bond bond = finite_bond_separating(g, a, b);
    CHECK(bond_is_valid(g, bond));
    CHECK(is_bond(g, bond.edges));
    // separation: A in one side, B in the other
    for (Vertex v : a) CHECK(std::binary_search(bond.side_a.begin(), bond.side_a.end(), v));
    for (Vertex v : b) CHECK(std::binary_search(bond.side_b.begin(), bond.side_b.end(), v));
    // cardinality equals the set min cut
    CHECK(static_cast<int>(bond.edges.size()) ==
          oracle::min_cut_sets_by_bipartitions(g, a, b));
    ++done;
  }
}

TEST_CASE("adding an edge never decreases the min cut") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    MultiGraph g = oracle::random_connected_multigraph(rng, 6, 8);
    int n = g.vertex_count();
    std::uniform_int_distribution<int> vd(0, n - 1);
    Vertex s = vd(rng), t = vd(rng);
    if (s == t) continue;
    int before = min_edge_cut(g, s, t).value;

    Vertex x = vd(rng), y = vd(rng);
    if (x == y) continue;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.endpoints(e);
      pairs.emplace_back(g.vertex_name(u), g.vertex_name(v));
    }
    pairs.emplace_back(g.vertex_name(x), g.vertex_name(y));
    MultiGraph bigger = MultiGraph::build(pairs);
    CHECK(min_edge_cut(bigger, bigger.vertex(g.vertex_name(s)), bigger.vertex(g.vertex_name(t)))
              .value >= before);
  }
}
