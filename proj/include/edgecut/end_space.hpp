#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgecut/error.hpp"

namespace edgecut {

// Symbolic branching cardinality. "Uncountable" is a tag consumed by the
// first-countability criterion, never instantiated; truncation samples
// witness copies regardless of tag.
enum class Card { Finite, Countable, Uncountable };

struct BulkGroup {
  Card card = Card::Countable;
  int finite_count = 0;  // when card == Finite
  int pattern = -1;      // spec index of the shared child subtree
};

// One node pattern of a finitely presented rooted tree. `children` are
// explicit child specs; `spine` (when >= 0) continues an infinite ray below
// the node (spine chains always cycle, which is how infinite depth is
// written down); bulk groups are finitely or infinitely many children
// sharing one pattern. At most one infinite bulk group per node, and it
// must be the last group, so child addresses stay stable:
//   explicit children:  0 .. c-1
//   spine:              c (when present)
//   bulk groups:        consecutive addresses after that; an infinite
//                       group owns every later address.
struct NodeSpec {
  bool marked = false;
  std::vector<int> children;
  int spine = -1;
  std::vector<BulkGroup> bulks;
};

struct SymbolicTree {
  std::vector<NodeSpec> specs;
  int root = 0;

  const NodeSpec& spec(int i) const { return specs[i]; }
  // Child spec reached by a child address, or -1 when none exists.
  int child_spec(int s, int address) const;
  // Number of child addresses of a spec, or -1 for infinitely many.
  long long child_count(int s) const;
  // Spec at the end of a root path; throws error(badpath) on dead addresses.
  int spec_at(const std::vector<int>& path) const;
  // Structural sanity (indices in range, bulk layout); "" when fine.
  std::string validate() const;
};

// Finite rooted tree realized from a symbolic one: all explicit children
// and spines, plus `witness` sampled members per bulk group, to `depth`.
struct FiniteTree {
  struct Node {
    std::vector<int> path;
    int spec = -1;
    bool marked = false;
    int parent = -1;
    std::vector<int> children;       // node indices
    bool has_continuation = false;   // the infinite tree goes on below
  };
  std::vector<Node> nodes;  // BFS order, nodes[0] = root
  int depth = 0;
  int witness = 1;

  int find(const std::vector<int>& path) const;  // node index or -1
};

FiniteTree truncate(const SymbolicTree& t, int depth, int witness);

// Whether truncate at this witness budget materializes the child address.
bool address_realized(const SymbolicTree& t, int spec, int address, int witness);

// Rooted ray written as child addresses: prefix then period repeated
// forever. Used as a demand-driven generator via ray_path_at.
struct RaySpec {
  std::vector<int> prefix;
  std::vector<int> period;  // nonempty
};

std::vector<int> ray_path_at(const RaySpec& ray, int depth);

// Stateful single-consumer generator over a ray: each advance() yields the
// path of the next node. Do not share a live cursor across consumers; copy
// the RaySpec and open another cursor instead.
class RayCursor {
 public:
  explicit RayCursor(RaySpec spec) : spec_(std::move(spec)) {}
  const std::vector<int>& advance();
  const std::vector<int>& path() const { return path_; }
  int depth() const { return static_cast<int>(path_.size()); }

 private:
  RaySpec spec_;
  std::vector<int> path_;
};

// Point of ||T||: a marked node of T or an end given by a rooted ray.
struct SubspacePoint {
  enum class Kind { Node, End };
  Kind kind = Kind::Node;
  std::vector<int> node_path;
  RaySpec ray;
};

SubspacePoint node_point(const SymbolicTree& t, std::vector<int> path);
SubspacePoint end_point(const SymbolicTree& t, RaySpec ray);

// Basic open set generator: the up-closure of a node, or the component of
// T - F containing an anchor node (F given as the paths of the lower
// endpoints of deleted edges). Membership is decided from finite prefixes.
struct BasicOpen {
  enum class Kind { UpClosure, Component };
  Kind kind = Kind::UpClosure;
  std::vector<int> node;                        // x, or the component anchor
  std::vector<std::vector<int>> deleted_edges;  // Component only
};

BasicOpen up_closure(std::vector<int> node);
BasicOpen tree_component(std::vector<std::vector<int>> deleted_edges, std::vector<int> anchor);

bool basic_open_membership(const SymbolicTree& t, const BasicOpen& b, const SubspacePoint& p);

// Ultrametric between two ends: 2^{-n} for n the depth of the deepest
// common node, computed from prefixes; rays agreeing through max_depth are
// reported indistinguishable-at-depth instead of pretending to decide 0.
struct EndDistance {
  int exponent = 0;
  bool indistinguishable = false;
  double value() const;
};

EndDistance end_distance(const SymbolicTree& t, const SubspacePoint& p, const SubspacePoint& q,
                         int max_depth);

// First-countability (= metrizability) criterion for X = marked nodes +
// all ends: fails exactly when some marked node has an uncountable bulk
// group whose subtrees meet X.
struct MetrizabilityWitness {
  std::vector<int> node_path;  // a marked node carrying the bad group
  int spec = -1;
  int bulk_index = -1;
};

struct MetrizabilityVerdict {
  bool metrizable = true;
  std::optional<MetrizabilityWitness> witness;
};

MetrizabilityVerdict is_first_countable(const SymbolicTree& t, bool include_all_ends);

// Whether the subtree below a spec contains a point of X (a marked node or
// any end); with all ends in X this is "marked reachable or infinite".
bool subtree_meets_x(const SymbolicTree& t, int spec);

// Per-spec fixed points over the reference graph: unfolds to a subtree
// containing a marked node / having infinite descent (hence an end).
std::vector<char> marked_below_table(const SymbolicTree& t);
std::vector<char> infinite_below_table(const SymbolicTree& t);

// First `count` child addresses of `spec` whose subtrees meet X, ascending.
std::vector<int> relevant_child_addresses(const SymbolicTree& t, int spec, int count);

// n-th element of the countable neighbourhood base at a marked node x: the
// component of T - {parent edge, first n relevant child edges} containing x.
BasicOpen neighbourhood_base_element(const SymbolicTree& t, const std::vector<int>& x, int n);

}  // namespace edgecut
