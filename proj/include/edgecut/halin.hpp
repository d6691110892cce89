#pragma once

#include <optional>
#include <vector>

#include "edgecut/graph.hpp"
#include "edgecut/mincut.hpp"

namespace edgecut {

// Subdivided k-star attached to a vertex set W: k branch paths from the
// center to k distinct leaves in W, pairwise disjoint except at the center,
// with every non-leaf vertex outside W. The interior is the star minus its
// leaves.
struct ExternalStar {
  Vertex center = -1;
  std::vector<Path> branches;      // each from center to its leaf
  std::vector<Vertex> attachment;  // sorted leaves
};

std::vector<Vertex> star_interior(const ExternalStar& s);

// Validates the star against G and W (independent of the finder).
bool star_is_valid(const MultiGraph& g, const std::vector<Vertex>& w, int k,
                   const ExternalStar& s);

// K_{k,m} subdivision witness: spokes[c][h] is an internally disjoint path
// from centers[c] to hubs[h].
struct Subdivision {
  int k = 0;
  int m = 0;
  std::vector<Vertex> hubs;
  std::vector<Vertex> centers;
  std::vector<std::vector<Path>> spokes;
};

struct SubdivisionSearch {
  std::optional<Subdivision> found;
  // A miss is not a proof of absence: the packing is greedy, not exhaustive.
  bool none_found_is_certificate = false;
  int rounds = 0;
};

// External k-star centered at v attached to W whose interior avoids
// forbidden_interior, or nullopt. Vertex-capacitated fan computation;
// deterministic branch extraction.
std::optional<ExternalStar> external_star(const MultiGraph& g, const std::vector<Vertex>& w,
                                          Vertex v, int k,
                                          const std::vector<Vertex>& forbidden_interior = {});

// Greedy inclusion-maximal family of internally disjoint external k-stars
// attached to W, centers probed in sorted order.
std::vector<ExternalStar> maximal_star_packing(const MultiGraph& g, const std::vector<Vertex>& w,
                                               int k);

// Saturation iteration: grow U_0 (the first seed_size vertices) by maximal
// packings, scanning each round for m stars sharing an attachment set.
SubdivisionSearch find_kkm_subdivision(const MultiGraph& g, int k, int m, int seed_size = 2);

// Independent witness check: paths exist edge by edge, internal disjointness
// across the whole family, attachment correctness.
bool validate_subdivision(const MultiGraph& g, const Subdivision& s);

}  // namespace edgecut
