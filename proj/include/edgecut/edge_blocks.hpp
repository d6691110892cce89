#pragma once

#include <array>
#include <vector>

#include "edgecut/graph.hpp"
#include "edgecut/mincut.hpp"

namespace edgecut {

// Weighted tree on V(G) encoding all pairwise local edge connectivities: the
// minimum edge weight on the tree path u..v equals min_edge_cut(G,u,v).value.
// Each tree edge also stores the cut of G realized by its fundamental
// bipartition, whose size equals the edge weight.
struct GomoryHuTree {
  const MultiGraph* graph = nullptr;
  std::vector<std::array<Vertex, 2>> edges;  // n-1 tree edges
  std::vector<int> weights;                  // per tree edge
  std::vector<Cut> cuts;                     // fundamental bipartition per tree edge

  int path_min(Vertex u, Vertex v) const;
};

// Partition of V(G) by the relation "lambda(u,v) >= k".
struct BlockPartition {
  int k = 1;
  std::vector<std::vector<Vertex>> blocks;  // sorted members, ordered by smallest member
};

int block_of(const BlockPartition& p, Vertex v);

// lambda(u,v): minimum number of edges whose deletion separates u from v.
int local_edge_connectivity(const MultiGraph& g, Vertex u, Vertex v);

// Gusfield's contraction-free scheme: n-1 min-cut calls in the original
// graph, with the reparenting step that makes the result a genuine cut tree
// (fundamental bipartitions realize the edge weights).
GomoryHuTree gomory_hu(const MultiGraph& g);

// Components of the Gomory-Hu tree after deleting edges of weight < k.
BlockPartition k_edge_blocks(const MultiGraph& g, int k);
BlockPartition k_edge_blocks(const MultiGraph& g, const GomoryHuTree& tree, int k);

}  // namespace edgecut
