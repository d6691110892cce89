#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "edgecut/end_space.hpp"
#include "tree_gen.hpp"

using namespace edgecut;

namespace {

SymbolicTree binary_tree() {
  SymbolicTree t;
  t.specs.push_back(NodeSpec{});
  t.specs[0].children = {0, 0};
  t.root = 0;
  return t;
}

SymbolicTree countable_fan(bool leaves_marked = false) {
  SymbolicTree t;
  t.specs.push_back(NodeSpec{});  // root
  t.specs.push_back(NodeSpec{});  // leaf pattern
  t.specs[0].marked = true;
  t.specs[1].marked = leaves_marked;
  t.specs[0].bulks.push_back(BulkGroup{Card::Countable, 0, 1});
  t.root = 0;
  return t;
}

// Marked root; uncountably many children each heading an infinite path.
SymbolicTree uncountable_fan() {
  SymbolicTree t;
  t.specs.resize(3);
  t.specs[0].marked = true;
  t.specs[0].bulks.push_back(BulkGroup{Card::Uncountable, 0, 1});
  t.specs[1].spine = 2;  // each bulk child heads a ray
  t.specs[2].spine = 2;
  t.root = 0;
  return t;
}

// Marked root; uncountable bulk of bare leaves plus one ray child.
SymbolicTree unmarked_bulk_family() {
  SymbolicTree t;
  t.specs.resize(3);
  t.specs[0].marked = true;
  t.specs[0].children = {1};
  t.specs[1].spine = 1;  // the single ray child
  t.specs[0].bulks.push_back(BulkGroup{Card::Uncountable, 0, 2});
  t.root = 0;
  return t;
}

}  // namespace

TEST_CASE("truncate sizes") {
  SymbolicTree lone;
  lone.specs.push_back(NodeSpec{});
  lone.root = 0;
  CHECK(truncate(lone, 0, 1).nodes.size() == 1);

  CHECK(truncate(binary_tree(), 0, 1).nodes.size() == 1);
  CHECK(truncate(binary_tree(), 3, 7).nodes.size() == 15);

  FiniteTree star = truncate(countable_fan(), 1, 5);
  CHECK(star.nodes.size() == 6);
  CHECK(star.nodes[0].children.size() == 5);

  // finite bulk samples min(count, witness)
  SymbolicTree f;
  f.specs.resize(2);
  f.specs[0].bulks.push_back(BulkGroup{Card::Finite, 3, 1});
  f.root = 0;
  CHECK(truncate(f, 1, 5).nodes.size() == 4);
  CHECK(truncate(f, 1, 2).nodes.size() == 3);

  CHECK_THROWS_AS(truncate(f, -1, 1), Error);
}

TEST_CASE("point constructors validate") {
  SymbolicTree fan = countable_fan();
  CHECK_NOTHROW(node_point(fan, {}));            // marked root
  CHECK_THROWS_AS(node_point(fan, {0}), Error);  // unmarked leaf
  CHECK_THROWS_AS(node_point(fan, {0, 0}), Error);

  SymbolicTree bin = binary_tree();
  CHECK_NOTHROW(end_point(bin, RaySpec{{0, 1}, {0, 1}}));
  CHECK_THROWS_AS(end_point(bin, RaySpec{{2}, {0}}), Error);
  CHECK_THROWS_AS(end_point(fan, RaySpec{{0}, {0}}), Error);  // leaves have no children
}

TEST_CASE("end_distance") {
  SymbolicTree bin = binary_tree();
  auto left = end_point(bin, RaySpec{{}, {0}});
  auto right = end_point(bin, RaySpec{{}, {1}});
  auto d = end_distance(bin, left, right, 12);
  CHECK(d.exponent == 0);
  CHECK(d.value() == 1.0);

  auto same = end_distance(bin, left, left, 12);
  CHECK(same.indistinguishable);
  CHECK(same.value() == 0.0);

  // rays sharing exactly 4 edges
  auto p = end_point(bin, RaySpec{{0, 1, 0, 1, 0}, {0}});
  auto q = end_point(bin, RaySpec{{0, 1, 0, 1, 1}, {1}});
  auto d4 = end_distance(bin, p, q, 12);
  CHECK(d4.exponent == 4);
  CHECK(d4.value() == doctest::Approx(1.0 / 16));

  auto node = node_point(countable_fan(), {});
  CHECK_THROWS_AS(end_distance(bin, left, node, 12), Error);
}

TEST_CASE("ultrametric inequality on sampled triples") {
  SymbolicTree bin = binary_tree();
  std::mt19937 rng(97);
  auto random_ray = [&]() {
    RaySpec r;
    int len = static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) r.prefix.push_back(static_cast<int>(rng() % 2));
    int plen = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < plen; ++i) r.period.push_back(static_cast<int>(rng() % 2));
    return end_point(bin, r);
  };
  for (int i = 0; i < 300; ++i) {
    auto a = random_ray(), b = random_ray(), c = random_ray();
    double ab = end_distance(bin, a, b, 12).value();
    double bc = end_distance(bin, b, c, 12).value();
    double ac = end_distance(bin, a, c, 12).value();
    CHECK(ac <= std::max(ab, bc) + 1e-12);
  }
}

TEST_CASE("basic_open_membership") {
  SymbolicTree bin = binary_tree();
  auto left = end_point(bin, RaySpec{{}, {0}});
  CHECK(basic_open_membership(bin, up_closure({}), left));
  CHECK(basic_open_membership(bin, up_closure({0, 0}), left));
  CHECK_FALSE(basic_open_membership(bin, up_closure({1}), left));

  // component of T - F: cut off the subtree below node 0 at depth 1
  BasicOpen comp = tree_component({{0}}, {});
  CHECK_FALSE(basic_open_membership(bin, comp, left));
  auto right = end_point(bin, RaySpec{{}, {1}});
  CHECK(basic_open_membership(bin, comp, right));
  // ... and the complementary component
  BasicOpen inside = tree_component({{0}}, {0});
  CHECK(basic_open_membership(bin, inside, left));
  CHECK_FALSE(basic_open_membership(bin, inside, right));
}

TEST_CASE("component membership agrees with a truncation-level recount") {
  SymbolicTree bin = binary_tree();
  std::mt19937 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    // three random deleted edges at depth <= 3
    std::vector<std::vector<int>> f;
    for (int i = 0; i < 3; ++i) {
      std::vector<int> edge;
      int len = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < len; ++j) edge.push_back(static_cast<int>(rng() % 2));
      f.push_back(std::move(edge));
    }
    std::vector<int> anchor;  // root component
    BasicOpen open = tree_component(f, anchor);

    FiniteTree ft = truncate(bin, 5, 1);
    // recount: union-find over realized tree edges not in F
    std::vector<int> rep(ft.nodes.size());
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&rep](int x) {
      while (rep[x] != x) x = rep[x] = rep[rep[x]];
      return x;
    };
    for (size_t i = 1; i < ft.nodes.size(); ++i) {
      bool deleted = false;
      for (const auto& edge : f) {
        if (ft.nodes[i].path == edge) deleted = true;
      }
      if (!deleted) {
        int a = find(static_cast<int>(i)), b = find(ft.nodes[i].parent);
        if (a != b) rep[std::max(a, b)] = std::min(a, b);
      }
    }
    int root_comp = find(0);
    for (size_t i = 0; i < ft.nodes.size(); ++i) {
      SubspacePoint p;
      p.kind = SubspacePoint::Kind::Node;
      p.node_path = ft.nodes[i].path;
      CHECK(basic_open_membership(bin, open, p) == (find(static_cast<int>(i)) == root_comp));
    }
  }
}

TEST_CASE("ray cursor yields successive nodes and clones restart fresh") {
  RaySpec spec{{1, 0}, {0, 1}};
  RayCursor cursor(spec);
  CHECK(cursor.advance() == std::vector<int>{1});
  CHECK(cursor.advance() == std::vector<int>{1, 0});
  CHECK(cursor.advance() == std::vector<int>{1, 0, 0});
  CHECK(cursor.advance() == std::vector<int>{1, 0, 0, 1});
  CHECK(cursor.depth() == 4);
  RayCursor fresh(spec);  // a second consumer opens its own cursor
  CHECK(fresh.advance() == std::vector<int>{1});
  CHECK(cursor.path().size() == 4);
  CHECK(cursor.path() == ray_path_at(spec, 4));
}

TEST_CASE("is_first_countable on the four families") {
  CHECK(is_first_countable(binary_tree(), true).metrizable);
  CHECK(is_first_countable(countable_fan(), true).metrizable);

  auto bad = is_first_countable(uncountable_fan(), true);
  CHECK_FALSE(bad.metrizable);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->node_path.empty());  // the root
  CHECK(bad.witness->bulk_index == 0);

  CHECK(is_first_countable(unmarked_bulk_family(), true).metrizable);

  CHECK_THROWS_AS(is_first_countable(binary_tree(), false), Error);
  try {
    is_first_countable(binary_tree(), false);
  } catch (const Error& e) {
    CHECK(e.code() == "unsupported");
  }
}

TEST_CASE("uncountable bulk with marked-but-finite subtrees is still non-metrizable") {
  SymbolicTree t;
  t.specs.resize(2);
  t.specs[0].marked = true;
  t.specs[1].marked = true;  // marked leaves meet X even with no ends below
  t.specs[0].bulks.push_back(BulkGroup{Card::Uncountable, 0, 1});
  t.root = 0;
  CHECK_FALSE(is_first_countable(t, true).metrizable);
}

TEST_CASE("uncountable bulk at an unmarked node does not break first countability") {
  SymbolicTree t = uncountable_fan();
  t.specs[0].marked = false;
  CHECK(is_first_countable(t, true).metrizable);
}

TEST_CASE("verdict is stable under adding leaf children to unmarked nodes") {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    SymbolicTree t = testutil::random_metrizable_tree(rng);
    if (rng() % 3 == 0 && t.specs[t.root].bulks.empty()) {
      // sprinkle in a non-metrizable core sometimes
      int pat = static_cast<int>(t.specs.size());
      t.specs.push_back(NodeSpec{});
      t.specs[pat].marked = true;
      t.specs[t.root].marked = true;
      t.specs[t.root].bulks.push_back(BulkGroup{Card::Uncountable, 0, pat});
    }
    bool before = is_first_countable(t, true).metrizable;
    std::vector<int> unmarked;
    for (int s = 0; s < static_cast<int>(t.specs.size()); ++s) {
      if (!t.spec(s).marked) unmarked.push_back(s);
    }
    if (unmarked.empty()) continue;
    int target = unmarked[rng() % unmarked.size()];
    int leaf = static_cast<int>(t.specs.size());
    t.specs.push_back(NodeSpec{});
    t.specs[target].children.push_back(leaf);
    CHECK(is_first_countable(t, true).metrizable == before);
  }
}

TEST_CASE("neighbourhood base elements at a marked node") {
  // marked root over countably many marked leaves: every leaf edge is
  // relevant, so C_n peels the first n leaves
  SymbolicTree fan = countable_fan(true);
  for (int n = 1; n <= 4; ++n) {
    BasicOpen cn = neighbourhood_base_element(fan, {}, n);
    SubspacePoint root;
    root.kind = SubspacePoint::Kind::Node;
    root.node_path = {};
    CHECK(basic_open_membership(fan, cn, root));
    for (int leaf = 0; leaf < 6; ++leaf) {
      SubspacePoint lp;
      lp.kind = SubspacePoint::Kind::Node;
      lp.node_path = {leaf};
      CHECK(basic_open_membership(fan, cn, lp) == (leaf >= n));
    }
  }
}
