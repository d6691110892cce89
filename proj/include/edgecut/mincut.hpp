#pragma once

#include <vector>

#include "edgecut/graph.hpp"

namespace edgecut {

// Walk in G: vertices.size() == edges.size() + 1 and edges[i] joins
// vertices[i] to vertices[i+1].
struct Path {
  std::vector<Vertex> vertices;
  std::vector<EdgeIdx> edges;
};

// Minimum cut together with a maximum edge-disjoint path system of equal
// size (both directions of the max-flow/min-cut equality, kept as a
// checkable certificate).
struct CutCertificate {
  int value = 0;
  Cut cut;                  // side_a holds the source side
  std::vector<Path> paths;  // pairwise edge-disjoint, each crossing the cut
};

bool certificate_is_valid(const MultiGraph& g, const CutCertificate& cert);

// Minimum-cardinality edge cut separating s from t, via unit-capacity
// augmenting paths over the parallel-edge arcs. Deterministic: arcs are
// scanned in edge-index order, the returned cut is the residual-reachable
// side of s.
CutCertificate min_edge_cut(const MultiGraph& g, Vertex s, Vertex t);

// Minimum edge cut with all of A on one side and all of B on the other.
// removed_edges masks out deleted edges (the cut is a cut of G - removed).
CutCertificate min_cut_between_sets(const MultiGraph& g, const std::vector<Vertex>& set_a,
                                    const std::vector<Vertex>& set_b,
                                    const std::vector<char>& removed_edges = {});

// A finite bond separating A from B: both sides of the returned cut induce
// connected subgraphs. Requires G connected and A, B disjoint, nonempty and
// each inducing a connected subgraph (the bond conclusion can fail
// otherwise, so the hypothesis is enforced, not relaxed).
Bond finite_bond_separating(const MultiGraph& g, const std::vector<Vertex>& set_a,
                            const std::vector<Vertex>& set_b,
                            const std::vector<char>& removed_edges = {});

}  // namespace edgecut
