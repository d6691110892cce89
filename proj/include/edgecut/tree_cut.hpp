#pragma once

#include <optional>
#include <vector>

#include "edgecut/edge_blocks.hpp"
#include "edgecut/fin_sep_tree.hpp"
#include "edgecut/graph.hpp"

namespace edgecut {

// Tree-cut decomposition: a tree whose nodes index a partition of V(G) into
// nonempty parts. Tree nodes are 0..node_count-1; parts are sorted vertex
// lists ordered by smallest member.
struct TreeCutDecomposition {
  const MultiGraph* base = nullptr;
  int node_count = 0;
  std::vector<std::pair<int, int>> tree_edges;   // node pairs
  std::vector<std::vector<Vertex>> parts;        // per node, nonempty

  std::string node_name(int t) const { return "t" + std::to_string(t); }
};

// Partition/tree validity; returns a failure message or "".
std::string decomposition_is_valid(const TreeCutDecomposition& d);

struct AdhesionReport {
  std::vector<std::vector<EdgeIdx>> adhesion;  // per tree edge, sorted
  int max_adhesion = 0;
};

// The cut of the base graph induced by the fundamental bipartition of the
// decomposition tree at edge index e.
Cut adhesion_set(const TreeCutDecomposition& d, int tree_edge_index);

AdhesionReport adhesion_report(const TreeCutDecomposition& d);

// Simple graph on the blocks: XY is an edge iff X != Y and some X-Y edge
// exists in G. Quotient vertices are named by each block's smallest member,
// so quotient vertex i corresponds to block i.
MultiGraph quotient_graph(const MultiGraph& g, const BlockPartition& p);

enum class DecompositionBackend { Paper, GomoryHu };

struct KBlockDecomposition {
  TreeCutDecomposition decomposition;
  AdhesionReport adhesion;
  DecompositionBackend backend = DecompositionBackend::GomoryHu;
  // Paper backend: the spanning-tree certificate over the quotient graph
  // (kept so the adjacency guarantee can be replayed), plus the quotient.
  std::optional<SpanningTreeCertificate> certificate;
  std::optional<MultiGraph> quotient;
};

// Decomposes G into its k-edge blocks. The `paper` backend spans the
// quotient graph with finitely_separating_spanning_tree, guaranteeing a
// witnessing G-edge for every tree edge. The `gomoryhu` backend takes the
// Gomory-Hu tree of G with every block contracted, guaranteeing
// max_adhesion < k. Neither guarantee implies the other.
KBlockDecomposition decompose_into_k_blocks(const MultiGraph& g, int k,
                                            DecompositionBackend backend);

// Lifts a connected set of tree nodes to the region of G on the union of
// its parts. Throws error(notregion) if the node set is not connected in T
// or the lift is not connected in G.
Region region_up(const TreeCutDecomposition& d, const std::vector<int>& tree_nodes);

// Splits a region of G whose vertex set is a union of parts into pairwise
// disjoint connected tree-node sets whose lifts partition it. Throws
// error(splitspart) when the region cuts through a part.
std::vector<std::vector<int>> region_down(const TreeCutDecomposition& d, const Region& c);

}  // namespace edgecut
