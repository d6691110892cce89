#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edgecut/error.hpp"

namespace edgecut {

using Vertex = int;   // index into MultiGraph vertex table
using EdgeIdx = int;  // index into MultiGraph edge table

// Finite undirected multigraph with stable vertex/edge identities.
// Parallel edges are first-class: cuts and adhesion sets are sets of edge
// indices, never endpoint pairs, because cut cardinality counts multiplicity.
// Loops are rejected at construction. Vertex indices follow sorted name
// order and edge indices follow input order, so all downstream iteration is
// deterministic.
class MultiGraph {
 public:
  MultiGraph() = default;

  // Builds a graph from endpoint-name pairs plus extra isolated vertices.
  // Duplicate pairs become parallel edges; a pair with equal endpoints is a
  // loop and raises error(loop).
  static MultiGraph build(const std::vector<std::pair<std::string, std::string>>& edge_list,
                          const std::vector<std::string>& isolated = {});

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_name(Vertex v) const { return names_[v]; }
  std::string edge_name(EdgeIdx e) const { return "e" + std::to_string(e); }

  // Name lookups; throw error(unknownvertex)/error(unknownedge) on misses.
  Vertex vertex(const std::string& name) const;
  EdgeIdx edge(const std::string& name) const;

  std::pair<Vertex, Vertex> endpoints(EdgeIdx e) const { return edges_[e]; }
  Vertex other_end(EdgeIdx e, Vertex v) const {
    return edges_[e].first == v ? edges_[e].second : edges_[e].first;
  }
  const std::vector<EdgeIdx>& incident(Vertex v) const { return incident_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }

  bool connected() const;

  // Component label per vertex (labels are 0-based, assigned in sorted order
  // of each component's smallest vertex). Edges flagged in removed_edge are
  // ignored; pass an empty vector to keep all edges.
  std::vector<int> component_labels(const std::vector<char>& removed_edge = {}) const;

 private:
  std::vector<std::string> names_;                 // sorted
  std::vector<std::pair<Vertex, Vertex>> edges_;   // input order
  std::vector<std::vector<EdgeIdx>> incident_;     // per vertex, ascending
};

// Connected subgraph handle: ambient graph plus a sorted, nonempty vertex
// set inducing a connected subgraph. make_region validates both.
struct Region {
  const MultiGraph* graph = nullptr;
  std::vector<Vertex> vertices;  // sorted
};

Region make_region(const MultiGraph& g, std::vector<Vertex> vertices);

// Edge cut as data: the crossing edge set together with the bipartition
// (side_a, side_b) that induces it. Validity is contextual (a certificate
// may store a cut of an intermediate graph), so checks are free functions.
struct Cut {
  std::vector<EdgeIdx> edges;    // sorted
  std::vector<Vertex> side_a;    // sorted
  std::vector<Vertex> side_b;    // sorted
};

// A bond is a cut both of whose sides induce connected subgraphs.
using Bond = Cut;

// Several operations run against a "surviving" subgraph G - E for an edge
// set E that grows over time; they take an optional removed-edge mask
// (indexed by edge, empty = nothing removed) instead of materializing the
// subgraph, so edge indices stay stable.

// Connectivity of the induced subgraph on a vertex set, ignoring masked edges.
bool induced_connected(const MultiGraph& g, const std::vector<Vertex>& verts,
                       const std::vector<char>& removed_edges = {});

// Builds the cut induced by side_a (edges = exactly the crossing edges).
Cut cut_from_side(const MultiGraph& g, const std::vector<Vertex>& side_a,
                  const std::vector<char>& removed_edges = {});

// edges == crossing edges of (side_a, side_b), sides partition V, both nonempty.
bool cut_is_valid(const MultiGraph& g, const Cut& c, const std::vector<char>& removed_edges = {});
// cut_is_valid plus both sides connected.
bool bond_is_valid(const MultiGraph& g, const Cut& c, const std::vector<char>& removed_edges = {});

// Edges with exactly one endpoint inside the vertex set.
std::vector<EdgeIdx> boundary_edges(const MultiGraph& g, const std::vector<Vertex>& vertex_set);
std::vector<EdgeIdx> boundary_edges(const Region& r);

// Connected components of G - F, each returned as a Region (their vertex
// sets partition V(G)). Components are ordered by smallest vertex.
std::vector<Region> components_after_deletion(const MultiGraph& g,
                                              const std::vector<EdgeIdx>& deleted);

// True iff G - F has exactly two components and every edge of F joins them,
// i.e. F is a minimal nonempty cut of the connected graph G.
bool is_bond(const MultiGraph& g, const std::vector<EdgeIdx>& f);

}  // namespace edgecut
