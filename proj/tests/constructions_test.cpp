#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "edgecut/constructions.hpp"
#include "edgecut/fin_sep_tree.hpp"
#include "edgecut/io.hpp"
#include "tree_gen.hpp"

using namespace edgecut;

namespace {

SymbolicTree marked_root_fan() {
  SymbolicTree t;
  t.specs.resize(2);
  t.specs[0].marked = true;
  t.specs[0].bulks.push_back(BulkGroup{Card::Countable, 0, 1});
  t.root = 0;
  return t;
}

SymbolicTree uncountable_fan() {
  SymbolicTree t;
  t.specs.resize(3);
  t.specs[0].marked = true;
  t.specs[0].bulks.push_back(BulkGroup{Card::Uncountable, 0, 1});
  t.specs[1].spine = 2;
  t.specs[2].spine = 2;
  t.root = 0;
  return t;
}

// Binary tree of depth 3 with one marked internal node (acyclic specs).
SymbolicTree finite_binary_marked() {
  SymbolicTree t;
  // depth-3 full binary tree, node (depth,index) flattened
  std::vector<int> level;
  for (int d = 3; d >= 0; --d) {
    std::vector<int> next;
    for (int i = 0; i < (1 << d); ++i) {
      int s = static_cast<int>(t.specs.size());
      t.specs.push_back(NodeSpec{});
      if (d < 3) {
        t.specs[s].children = {level[2 * i], level[2 * i + 1]};
      }
      next.push_back(s);
    }
    level = next;
  }
  t.root = level[0];
  t.specs[t.specs[t.root].children[0]].marked = true;  // one internal node
  return t;
}

}  // namespace

TEST_CASE("build_gx pads marked finite-degree nodes") {
  SymbolicTree plain = finite_binary_marked();
  PresentedGraph pg = build_gx(plain);
  CHECK(pg.padded_specs.size() == 1);
  int padded = pg.padded_specs[0];
  CHECK(pg.base.spec(padded).marked);
  CHECK(pg.base.child_count(padded) == -1);

  // nothing to do on an unmarked tree
  SymbolicTree unmarked = finite_binary_marked();
  for (auto& s : unmarked.specs) s.marked = false;
  CHECK(build_gx(unmarked).padded_specs.empty());

  // a marked node with a countable bulk already has infinite degree
  CHECK(build_gx(marked_root_fan()).padded_specs.empty());

  // with nothing marked, G_X is the tree itself: no ray edges at all
  RealizedGx plain_rg = realize_gx(build_gx(unmarked), 3, 3);
  CHECK(plain_rg.ray_edges.empty());
  CHECK(static_cast<int>(plain_rg.tree_edges.size()) == plain_rg.graph.vertex_count() - 1);
}

TEST_CASE("realize_gx on the fan: star plus a path through the leaves") {
  PresentedGraph pg = build_gx(marked_root_fan());
  RealizedGx rg = realize_gx(pg, 1, 4);
  CHECK(rg.graph.vertex_count() == 5);
  CHECK(rg.tree_edges.size() == 4);
  CHECK(rg.ray_edges.size() == 3);
  // ray edges join consecutive leaves
  for (size_t i = 0; i < rg.ray_edges.size(); ++i) {
    auto [u, v] = rg.graph.endpoints(rg.ray_edges[i]);
    CHECK(rg.graph.vertex_name(u) == "r." + std::to_string(i));
    CHECK(rg.graph.vertex_name(v) == "r." + std::to_string(i + 1));
  }
}

TEST_CASE("base tree is a spanning tree of every truncation") {
  std::mt19937 rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    SymbolicTree t = testutil::random_metrizable_tree(rng);
    PresentedGraph pg = build_gx(t);
    for (int depth = 1; depth <= 3; ++depth) {
      RealizedGx rg = realize_gx(pg, depth, 3);
      CHECK(static_cast<int>(rg.tree_edges.size()) == rg.graph.vertex_count() - 1);
      std::vector<char> non_tree(rg.graph.edge_count(), 1);
      for (EdgeIdx e : rg.tree_edges) non_tree[e] = 0;
      auto label = rg.graph.component_labels(non_tree);
      CHECK(*std::max_element(label.begin(), label.end()) == 0);  // spanning + connected
    }
  }
}

TEST_CASE("fundamental cuts of base-tree edges have size at most 3") {
  std::mt19937 rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    SymbolicTree t = testutil::random_metrizable_tree(rng);
    PresentedGraph pg = build_gx(t);
    RealizedGx rg = realize_gx(pg, 3, 3);
    for (EdgeIdx e : rg.tree_edges) {
      Cut fc = fundamental_cut(rg.graph, rg.tree_edges, e);
      CHECK(fc.edges.size() <= 3);
    }
  }
  // the spec's worked case: marked node x, cut of x-t_n is {x t_n} plus the
  // two ray edges at t_n
  PresentedGraph fan = build_gx(marked_root_fan());
  RealizedGx rg = realize_gx(fan, 1, 4);
  Cut middle = fundamental_cut(rg.graph, rg.tree_edges, 1);  // edge r - r.1
  CHECK(middle.edges.size() == 3);
}

TEST_CASE("phi maps R_x to x and descending rays to partial ends") {
  PresentedGraph fan = build_gx(marked_root_fan());
  GxRay rx;
  rx.tail = GxRay::Tail::SiblingChain;
  rx.anchor = {};
  rx.start_index = 1;
  for (int depth : {0, 2, 5}) {
    PhiResult r = phi(fan, rx, depth);
    CHECK(r.kind == PhiResult::Kind::NodePoint);
    CHECK(r.path.empty());
  }

  SymbolicTree bin;
  bin.specs.push_back(NodeSpec{});
  bin.specs[0].children = {0, 0};
  bin.specs[0].marked = false;
  bin.root = 0;
  PresentedGraph pgb = build_gx(bin);
  GxRay down;
  down.tail = GxRay::Tail::Descend;
  down.descend = RaySpec{{}, {0, 1}};
  PhiResult r3 = phi(pgb, down, 3);
  CHECK(r3.kind == PhiResult::Kind::PartialEnd);
  CHECK(r3.path == std::vector<int>{0, 1, 0});
  PhiResult r6 = phi(pgb, down, 6);
  // prefix-monotone across depths
  CHECK(std::equal(r3.path.begin(), r3.path.end(), r6.path.begin()));

  // a deep marked anchor resolves to a partial end at small depth
  SymbolicTree deep = finite_binary_marked();
  PresentedGraph pgd = build_gx(deep);
  GxRay deep_rx;
  deep_rx.tail = GxRay::Tail::SiblingChain;
  deep_rx.anchor = {0};
  PhiResult shallow = phi(pgd, deep_rx, 0);
  CHECK(shallow.kind == PhiResult::Kind::PartialEnd);
  PhiResult exact = phi(pgd, deep_rx, 1);
  CHECK(exact.kind == PhiResult::Kind::NodePoint);
  CHECK(exact.path == std::vector<int>{0});

  CHECK_THROWS_AS(phi(pgd, GxRay{GxRay::Tail::SiblingChain, {}, {1}, 1}, 2), Error);
}

TEST_CASE("phi is injective across realized points") {
  std::mt19937 rng(113);
  for (int trial = 0; trial < 15; ++trial) {
    SymbolicTree t = testutil::random_metrizable_tree(rng);
    PresentedGraph pg = build_gx(t);
    FiniteTree ft = truncate(pg.base, 3, 3);
    std::set<std::vector<int>> images;
    int count = 0;
    for (const auto& node : ft.nodes) {
      if (!node.marked || node.path.size() > 3) continue;
      GxRay rx;
      rx.tail = GxRay::Tail::SiblingChain;
      rx.anchor = node.path;
      PhiResult r = phi(pg, rx, 3);
      if (r.kind == PhiResult::Kind::NodePoint) {
        CHECK(images.insert(r.path).second);
        ++count;
      }
    }
    (void)count;
  }
}

TEST_CASE("build_tprime identity on unmarked input") {
  SymbolicTree bin;
  bin.specs.push_back(NodeSpec{});
  bin.specs[0].children = {0, 0};
  bin.root = 0;
  SymbolicTree tp = build_tprime(bin);
  FiniteTree a = truncate(bin, 4, 2);
  FiniteTree b = truncate(tp, 4, 2);
  REQUIRE(a.nodes.size() == b.nodes.size());
  for (size_t i = 0; i < a.nodes.size(); ++i) {
    CHECK(a.nodes[i].path == b.nodes[i].path);
    CHECK(a.nodes[i].marked == b.nodes[i].marked);
  }
}

TEST_CASE("build_tprime uncontracts a marked root into a spine") {
  // marked root with countably many ray-children (each child heads a ray)
  SymbolicTree t;
  t.specs.resize(3);
  t.specs[0].marked = true;
  t.specs[0].bulks.push_back(BulkGroup{Card::Countable, 0, 1});
  t.specs[1].spine = 2;
  t.specs[2].spine = 2;
  t.root = 0;

  TPrimeMap map = build_tprime_map(t);
  for (const NodeSpec& s : map.tprime.specs) CHECK_FALSE(s.marked);
  // root became a spine: each spine node carries one former child
  int head = map.tprime.root;
  CHECK(map.tprime.spec(head).children.size() == 1);
  CHECK(map.tprime.spec(head).spine >= 0);
  RaySpec ray = map.spine_ray({});
  CHECK_NOTHROW(end_point(map.tprime, ray));

  // relevant child n hangs from the n-th spine node
  auto suffix = map.step_suffix(0, 2);  // bulk member #2 (0-based address 2)
  CHECK(suffix == std::vector<int>{1, 1, 0});
}

TEST_CASE("build_tprime rejects non-first-countable input with a witness") {
  CHECK_THROWS_AS(build_tprime(uncountable_fan()), NotMetrizableError);
  try {
    build_tprime(uncountable_fan());
  } catch (const NotMetrizableError& e) {
    CHECK(e.witness.node_path.empty());
  }
}

TEST_CASE("h is a bijection on truncated point sets at depths 3-5") {
  std::mt19937 rng(127);
  for (int trial = 0; trial < 20; ++trial) {
    SymbolicTree t = testutil::random_metrizable_tree(rng);
    for (int depth = 3; depth <= 5; ++depth) {
      auto report = check_h_bijection(t, depth, 3);
      CHECK(report.ok);
      if (!report.ok) MESSAGE(report.failure);
    }
  }
}

TEST_CASE("h images are prefix-monotone between depths") {
  std::mt19937 rng(131);
  for (int trial = 0; trial < 15; ++trial) {
    SymbolicTree t = testutil::random_metrizable_tree(rng);
    TPrimeMap map = build_tprime_map(t);
    FiniteTree shallow = truncate(t, 3, 3);
    for (const auto& node : shallow.nodes) {
      if (static_cast<int>(node.path.size()) != 3) continue;
      auto base_image = map.map_path(node.path);
      // every deeper realization below this stub extends the image
      for (int a = 0; a < 3; ++a) {
        if (t.child_spec(node.spec, a) < 0) continue;
        auto longer = node.path;
        longer.push_back(a);
        auto deeper_image = map.map_path(longer);
        REQUIRE(deeper_image.size() >= base_image.size());
        CHECK(std::equal(base_image.begin(), base_image.end(), deeper_image.begin()));
      }
    }
  }
}

TEST_CASE("homeomorphism witness report: identity case") {
  SymbolicTree bin;
  bin.specs.push_back(NodeSpec{});
  bin.specs[0].children = {0, 0};
  bin.root = 0;
  auto report = check_homeomorphism_witness(bin, build_tprime(bin), 3);
  CHECK(report.failures == 0);
  CHECK_FALSE(report.entries.empty());
}

TEST_CASE("homeomorphism witness report: marked root fan exhibits the child-edge set") {
  SymbolicTree t = marked_root_fan();
  // make the fan's children relevant by marking the leaf pattern
  t.specs[1].marked = true;
  auto report = check_homeomorphism_witness(t, build_tprime(t), 4);
  CHECK(report.failures == 0);
  // the continuity witness for the root's second spine node is the first
  // two relevant child edges (the root has no parent edge)
  bool found_s2 = false;
  for (const auto& entry : report.entries) {
    if (entry.kind == "continuity" && entry.tprime_node == std::vector<int>{1}) {
      REQUIRE(entry.f_edges.size() == 2);
      CHECK(entry.f_edges[0] == std::vector<int>{0});
      CHECK(entry.f_edges[1] == std::vector<int>{1});
      found_s2 = true;
    }
  }
  CHECK(found_s2);
}

TEST_CASE("homeomorphism witness report: zero failures on random trees") {
  std::mt19937 rng(137);
  for (int trial = 0; trial < 15; ++trial) {
    SymbolicTree t = testutil::random_metrizable_tree(rng);
    auto report = check_homeomorphism_witness(t, build_tprime(t), 3);
    CHECK(report.failures == 0);
  }
}

TEST_CASE("edge domination at truncation scale: exactly the marked node dominates its end") {
  PresentedGraph fan = build_gx(marked_root_fan());
  RealizedGx rg = realize_gx(fan, 1, 6);
  const MultiGraph& g = rg.graph;
  // tail vertices of omega_x: the realized selected children r.0 ... r.5
  std::vector<Vertex> tail;
  for (int i = 0; i < 6; ++i) tail.push_back(g.vertex("r." + std::to_string(i)));

  // the root survives next to the tail under every deletion of <= 3 edges
  Vertex root = g.vertex("r");
  std::vector<EdgeIdx> all(g.edge_count());
  std::iota(all.begin(), all.end(), 0);
  for (EdgeIdx e1 = 0; e1 < g.edge_count(); ++e1) {
    for (EdgeIdx e2 = e1; e2 < g.edge_count(); ++e2) {
      for (EdgeIdx e3 = e2; e3 < g.edge_count(); ++e3) {
        auto comps = components_after_deletion(g, {e1, e2, e3});
        // the component holding the majority of the tail is the end's home
        const Region* home = nullptr;
        size_t best = 0;
        for (const Region& r : comps) {
          size_t hits = 0;
          for (Vertex v : tail) {
            if (std::binary_search(r.vertices.begin(), r.vertices.end(), v)) ++hits;
          }
          if (hits > best) {
            best = hits;
            home = &r;
          }
        }
        REQUIRE(home != nullptr);
        CHECK(std::binary_search(home->vertices.begin(), home->vertices.end(), root));
      }
    }
  }

  // while every leaf is separated from the tail's remainder by <= 3 edges
  for (int i = 0; i < 6; ++i) {
    Vertex leaf = g.vertex("r." + std::to_string(i));
    std::vector<EdgeIdx> f = boundary_edges(g, {leaf});
    CHECK(f.size() <= 3);
    auto comps = components_after_deletion(g, f);
    for (const Region& r : comps) {
      if (std::binary_search(r.vertices.begin(), r.vertices.end(), leaf)) {
        CHECK(r.vertices.size() == 1);  // isolated away from the end
      }
    }
  }
}
