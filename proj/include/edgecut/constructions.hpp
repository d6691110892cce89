#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgecut/end_space.hpp"
#include "edgecut/graph.hpp"

namespace edgecut {

// Raised by build_tprime on non-first-countable input.
class NotMetrizableError : public Error {
 public:
  explicit NotMetrizableError(MetrizabilityWitness w)
      : Error("notmetrizable", "input space is not first countable"), witness(std::move(w)) {}
  MetrizabilityWitness witness;
};

// Lazily presented graph G_X: a symbolic base tree (a spanning tree of
// every truncation) plus the ray-edge rule applied at every marked node x:
// consecutive children of x in selection order (explicit, spine, bulk
// members by ascending address) are joined by an edge, forming the ray R_x.
struct PresentedGraph {
  SymbolicTree base;
  std::vector<int> padded_specs;  // specs that received countable leaf padding
};

// Pads marked finite-degree nodes with a countable leaf group, then records
// the ray-edge rule (implicit in the markings).
PresentedGraph build_gx(const SymbolicTree& t);

// Finite realization of a presented graph. Vertices are named by their tree
// paths ("r", "r.0.2", ...); base tree edges come first in the edge table
// and form a spanning tree; ray edges join consecutive realized children of
// each realized marked node.
struct RealizedGx {
  MultiGraph graph;
  FiniteTree tree;
  std::vector<EdgeIdx> tree_edges;
  std::vector<EdgeIdx> ray_edges;
};

RealizedGx realize_gx(const PresentedGraph& pg, int depth, int witness);

std::string gx_vertex_name(const std::vector<int>& path);

// Ray handle in G_X. phi only consults the tail: either a descending rooted
// ray of the base tree, or the sibling chain R_x at a marked node entered
// at some selection position.
struct GxRay {
  enum class Tail { Descend, SiblingChain };
  Tail tail = Tail::Descend;
  RaySpec descend;          // Tail::Descend
  std::vector<int> anchor;  // Tail::SiblingChain: the marked node
  int start_index = 1;      // 1-based selection position
};

// Orientation outcome of the edge-end correspondence map, resolved to a
// finite depth: every base-tree edge up to `depth` is oriented toward the
// side holding the ray's tail; either all arrows meet at a node, or they
// escape along a ray prefix (reported as an end resolved to this depth).
struct PhiResult {
  enum class Kind { NodePoint, PartialEnd };
  Kind kind = Kind::NodePoint;
  std::vector<int> path;
  int resolved_depth = 0;
};

PhiResult phi(const PresentedGraph& pg, const GxRay& ray, int depth);

// T' construction and the point correspondence h. Every marked node x is
// uncontracted to an infinite spine; its n-th relevant child (subtree meets
// X) hangs from the n-th spine node, irrelevant children hang from the
// first; the output carries no markings.
struct TPrimeMap {
  SymbolicTree tprime;

  // T' path of a T node (for marked nodes: the head of their spine).
  std::vector<int> map_path(const std::vector<int>& t_path) const;
  // h of a marked node: the end descending its spine.
  RaySpec spine_ray(const std::vector<int>& marked_path) const;

  // Construction tables, one entry per T spec (see constructions.cpp).
  struct SpineInfo {
    std::vector<int> q;                    // explicit spine specs q_1..
    int tail = -1;                         // self-spined tail spec
    std::vector<int> relevant_addresses;   // finite relevant T addresses
    bool infinite_relevant = false;
    int infinite_base = 0;                 // first address of the infinite tail
    std::vector<int> irrelevant_addresses;
    bool irrelevant_bulk = false;
    int irrelevant_bulk_base = 0;
  };
  const SymbolicTree* source = nullptr;
  std::vector<int> image_spec;           // per T spec: plain image or spine head
  std::vector<SpineInfo> spines;         // per T spec; empty q for unmarked

  // Suffix of T' addresses realizing one T step (spec, address).
  std::vector<int> step_suffix(int t_spec, int address) const;
};

TPrimeMap build_tprime_map(const SymbolicTree& t);
SymbolicTree build_tprime(const SymbolicTree& t);

// Truncation-level check of the homeomorphism witnesses from the
// continuity/openness case analyses. Zero failures expected on valid input.
struct HomeoWitnessEntry {
  std::string kind;                            // "continuity" | "openness"
  std::vector<int> tprime_node;                // the T' basic open involved
  std::vector<std::vector<int>> f_edges;       // exhibited finite T edge set
  bool ok = true;
  std::string note;
};

struct HomeoReport {
  int depth = 0;
  int witness = 3;
  std::vector<HomeoWitnessEntry> entries;
  int failures = 0;
};

HomeoReport check_homeomorphism_witness(const SymbolicTree& t, const SymbolicTree& tprime,
                                        int depth, int witness = 3);

// Bijectivity of h on truncated point sets: every realized X point of T has
// a valid, pairwise distinguishable image, and every realized end direction
// of T' at the same scale is covered by an image.
struct HBijectionReport {
  int x_points = 0;
  int covered_stubs = 0;
  bool ok = true;
  std::string failure;
};

HBijectionReport check_h_bijection(const SymbolicTree& t, int depth, int witness);

}  // namespace edgecut
