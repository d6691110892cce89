#pragma once

// Seeded random symbolic trees for the construction tests: acyclic spec
// graphs with optional countable bulks and periodic rays, never uncountable
// (so they are always first countable).

#include <random>

#include "edgecut/end_space.hpp"

namespace edgecut::testutil {

inline int random_spec(SymbolicTree& t, std::mt19937& rng, int depth_budget) {
  int s = static_cast<int>(t.specs.size());
  t.specs.push_back(NodeSpec{});
  t.specs[s].marked = rng() % 10 < 3;
  if (depth_budget > 0) {
    int children = static_cast<int>(rng() % 3);
    for (int i = 0; i < children; ++i) {
      int c = random_spec(t, rng, depth_budget - 1);
      t.specs[s].children.push_back(c);
    }
    if (rng() % 10 < 3) {
      BulkGroup b;
      b.card = rng() % 2 ? Card::Countable : Card::Finite;
      b.finite_count = 1 + static_cast<int>(rng() % 3);
      b.pattern = random_spec(t, rng, depth_budget - 1);
      t.specs[s].bulks.push_back(b);
    }
    if (rng() % 10 < 4) {
      // periodic ray below this node: one or two alternating decorations
      int len = 1 + static_cast<int>(rng() % 2);
      std::vector<int> period;
      for (int i = 0; i < len; ++i) {
        int q = static_cast<int>(t.specs.size());
        t.specs.push_back(NodeSpec{});
        t.specs[q].marked = rng() % 10 < 2;
        if (rng() % 3 == 0 && depth_budget > 1) {
          int extra = random_spec(t, rng, depth_budget - 2);
          t.specs[q].children.push_back(extra);
        }
        period.push_back(q);
      }
      for (int i = 0; i < len; ++i) t.specs[period[i]].spine = period[(i + 1) % len];
      t.specs[s].spine = period[0];
    }
  }
  return s;
}

inline SymbolicTree random_metrizable_tree(std::mt19937& rng, int depth_budget = 4) {
  SymbolicTree t;
  t.root = random_spec(t, rng, depth_budget);
  return t;
}

}  // namespace edgecut::testutil
