#pragma once

#include <vector>

#include "edgecut/graph.hpp"

namespace edgecut {

// One growth step: edge e_n was added to the tree, F_n is the bond of the
// surviving graph G_{n-1} that contained it, and excluded_after is the
// accumulated excluded set E_n = E_{n-1} + (F_n - e_n).
struct SpanningStep {
  EdgeIdx chosen_edge = -1;
  Cut bond;  // bond of G - E_{n-1}; side_a holds the tree side
  std::vector<EdgeIdx> excluded_after;
};

// Spanning tree grown one edge at a time, excluding a bond per step so every
// tree edge is a bridge of the surviving graph. The payoff is the
// containment certificate: the fundamental cut of e_n in G is contained in
// excluded_after(n) + e_n.
struct SpanningTreeCertificate {
  Vertex root = 0;
  std::vector<EdgeIdx> tree_edges;  // insertion order e_1, e_2, ...
  std::vector<SpanningStep> steps;  // parallel to tree_edges
  std::vector<EdgeIdx> final_excluded;
};

// Runs the growth procedure from `root`. Targets are chosen as the first
// non-tree vertex in sorted order; the connecting path is the shortest one,
// ties broken by lexicographically least vertex sequence; the bond comes
// from finite_bond_separating on the surviving graph.
// With use_block_reduction the procedure runs separately inside each
// 2-connected block (bridges are their own blocks) and the per-block
// certificates are concatenated; kept as a fidelity option, off by default.
SpanningTreeCertificate finitely_separating_spanning_tree(const MultiGraph& g, Vertex root,
                                                          bool use_block_reduction = false);

// Cut of G induced by the two components of T - e.
Cut fundamental_cut(const MultiGraph& g, const std::vector<EdgeIdx>& tree_edges, EdgeIdx e);

// Replays every certificate invariant against G: exclusion bookkeeping,
// bond validity per step, bridge property, and the containment
// E(T1,T2) = E(C1,C2) subseteq E_n + e_n. Returns a failure message or ""
// when everything checks out.
std::string replay_certificate(const MultiGraph& g, const SpanningTreeCertificate& cert);

}  // namespace edgecut
