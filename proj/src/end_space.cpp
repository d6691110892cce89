#include "edgecut/end_space.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

namespace edgecut {

int SymbolicTree::child_spec(int s, int address) const {
  if (address < 0) return -1;
  const NodeSpec& n = specs[s];
  int a = address;
  if (a < static_cast<int>(n.children.size())) return n.children[a];
  a -= static_cast<int>(n.children.size());
  if (n.spine >= 0) {
    if (a == 0) return n.spine;
    a -= 1;
  }
  for (const BulkGroup& b : n.bulks) {
    if (b.card == Card::Finite) {
      if (a < b.finite_count) return b.pattern;
      a -= b.finite_count;
    } else {
      return b.pattern;  // infinite group owns every later address
    }
  }
  return -1;
}

long long SymbolicTree::child_count(int s) const {
  const NodeSpec& n = specs[s];
  long long count = static_cast<long long>(n.children.size()) + (n.spine >= 0 ? 1 : 0);
  for (const BulkGroup& b : n.bulks) {
    if (b.card == Card::Finite) {
      count += b.finite_count;
    } else {
      return -1;
    }
  }
  return count;
}

int SymbolicTree::spec_at(const std::vector<int>& path) const {
  int s = root;
  for (int a : path) {
    s = child_spec(s, a);
    if (s < 0) throw Error("badpath", "path leaves the tree");
  }
  return s;
}

std::string SymbolicTree::validate() const {
  int n = static_cast<int>(specs.size());
  if (root < 0 || root >= n) return "root out of range";
  for (int i = 0; i < n; ++i) {
    const NodeSpec& s = specs[i];
    for (int c : s.children) {
      if (c < 0 || c >= n) return "child spec out of range";
    }
    if (s.spine >= n) return "spine spec out of range";
    for (size_t b = 0; b < s.bulks.size(); ++b) {
      if (s.bulks[b].pattern < 0 || s.bulks[b].pattern >= n) return "bulk pattern out of range";
      if (s.bulks[b].card == Card::Finite && s.bulks[b].finite_count < 1) {
        return "finite bulk group needs count >= 1";
      }
      if (s.bulks[b].card != Card::Finite && b + 1 != s.bulks.size()) {
        return "infinite bulk group must be the last group";
      }
    }
    if (s.spine >= 0) {
      // spine chains must cycle (that is what makes them rays)
      std::set<int> seen;
      int cur = s.spine;
      while (cur >= 0 && !seen.count(cur)) {
        seen.insert(cur);
        cur = specs[cur].spine;
      }
      if (cur < 0) return "spine chain terminates; rays must cycle";
    }
  }
  return "";
}

namespace {

// Realized child addresses, ascending. Bulk groups contribute their first
// witnesses; for the (single, last) infinite group these are the first
// `witness` addresses of its tail.
std::vector<int> realized_addresses(const SymbolicTree& t, int s, int witness) {
  const NodeSpec& n = t.spec(s);
  std::vector<int> out;
  int base = 0;
  for (size_t i = 0; i < n.children.size(); ++i) out.push_back(base++);
  if (n.spine >= 0) out.push_back(base++);
  for (const BulkGroup& b : n.bulks) {
    int take = b.card == Card::Finite ? std::min(b.finite_count, witness) : witness;
    for (int j = 0; j < take; ++j) out.push_back(base + j);
    base += b.card == Card::Finite ? b.finite_count : take;
  }
  return out;
}

}  // namespace

FiniteTree truncate(const SymbolicTree& t, int depth, int witness) {
  if (depth < 0 || witness < 1) throw Error("badk", "truncate requires depth >= 0, witness >= 1");
  FiniteTree out;
  out.depth = depth;
  out.witness = witness;

  struct Item {
    std::vector<int> path;
    int spec;
    int parent;
  };
  std::deque<Item> work{{{}, t.root, -1}};
  while (!work.empty()) {
    Item item = work.front();
    work.pop_front();
    FiniteTree::Node node;
    node.path = item.path;
    node.spec = item.spec;
    node.marked = t.spec(item.spec).marked;
    node.parent = item.parent;
    node.has_continuation = t.child_count(item.spec) != 0;
    int index = static_cast<int>(out.nodes.size());
    if (item.parent >= 0) out.nodes[item.parent].children.push_back(index);
    out.nodes.push_back(std::move(node));

    if (static_cast<int>(item.path.size()) < depth) {
      for (int a : realized_addresses(t, item.spec, witness)) {
        std::vector<int> child_path = item.path;
        child_path.push_back(a);
        work.push_back({std::move(child_path), t.child_spec(item.spec, a), index});
      }
    }
  }
  return out;
}

bool address_realized(const SymbolicTree& t, int spec, int address, int witness) {
  const NodeSpec& n = t.spec(spec);
  int a = address;
  if (a < 0) return false;
  if (a < static_cast<int>(n.children.size())) return true;
  a -= static_cast<int>(n.children.size());
  if (n.spine >= 0) {
    if (a == 0) return true;
    a -= 1;
  }
  for (const BulkGroup& b : n.bulks) {
    int span = b.card == Card::Finite ? b.finite_count : -1;
    if (span < 0) return a < witness;
    if (a < span) return a < witness;
    a -= span;
  }
  return false;
}

int FiniteTree::find(const std::vector<int>& path) const {
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].path == path) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> ray_path_at(const RaySpec& ray, int depth) {
  if (ray.period.empty()) throw Error("badray", "ray period must be nonempty");
  std::vector<int> out;
  for (int i = 0; i < depth; ++i) {
    if (i < static_cast<int>(ray.prefix.size())) {
      out.push_back(ray.prefix[i]);
    } else {
      out.push_back(ray.period[(i - ray.prefix.size()) % ray.period.size()]);
    }
  }
  return out;
}

const std::vector<int>& RayCursor::advance() {
  int i = depth();
  if (i < static_cast<int>(spec_.prefix.size())) {
    path_.push_back(spec_.prefix[i]);
  } else {
    if (spec_.period.empty()) throw Error("badray", "ray period must be nonempty");
    path_.push_back(spec_.period[(i - spec_.prefix.size()) % spec_.period.size()]);
  }
  return path_;
}

SubspacePoint node_point(const SymbolicTree& t, std::vector<int> path) {
  int s = t.spec_at(path);
  if (!t.spec(s).marked) {
    throw Error("notmarked", "node points must be marked nodes (X restricted)");
  }
  SubspacePoint p;
  p.kind = SubspacePoint::Kind::Node;
  p.node_path = std::move(path);
  return p;
}

SubspacePoint end_point(const SymbolicTree& t, RaySpec ray) {
  if (ray.period.empty()) throw Error("badray", "ray period must be nonempty");
  // Walk the prefix, then simulate the period until the (spec, phase) state
  // repeats; every step must stay inside the tree.
  int s = t.spec_at(ray.prefix);
  std::set<std::pair<int, size_t>> seen;
  size_t phase = 0;
  while (seen.insert({s, phase}).second) {
    int next = t.child_spec(s, ray.period[phase]);
    if (next < 0) throw Error("badray", "ray walks off the tree");
    s = next;
    phase = (phase + 1) % ray.period.size();
  }
  SubspacePoint p;
  p.kind = SubspacePoint::Kind::End;
  p.ray = std::move(ray);
  return p;
}

BasicOpen up_closure(std::vector<int> node) {
  BasicOpen b;
  b.kind = BasicOpen::Kind::UpClosure;
  b.node = std::move(node);
  return b;
}

BasicOpen tree_component(std::vector<std::vector<int>> deleted_edges, std::vector<int> anchor) {
  BasicOpen b;
  b.kind = BasicOpen::Kind::Component;
  b.node = std::move(anchor);
  b.deleted_edges = std::move(deleted_edges);
  return b;
}

namespace {

bool is_prefix(const std::vector<int>& shorter, const std::vector<int>& longer) {
  if (shorter.size() > longer.size()) return false;
  return std::equal(shorter.begin(), shorter.end(), longer.begin());
}

// Whether the T-path between two nodes avoids every deleted edge. Edges are
// identified by the root path of their lower endpoint.
bool nodes_same_component(const std::vector<int>& a, const std::vector<int>& b,
                          const std::vector<std::vector<int>>& deleted) {
  size_t lca = 0;
  while (lca < a.size() && lca < b.size() && a[lca] == b[lca]) ++lca;
  for (const auto& edge : deleted) {
    if (edge.size() > lca) {
      if (is_prefix(edge, a) || is_prefix(edge, b)) return false;
    }
  }
  return true;
}

}  // namespace

bool basic_open_membership(const SymbolicTree& t, const BasicOpen& b, const SubspacePoint& p) {
  (void)t;
  if (b.kind == BasicOpen::Kind::UpClosure) {
    if (p.kind == SubspacePoint::Kind::Node) return is_prefix(b.node, p.node_path);
    auto ray_prefix = ray_path_at(p.ray, static_cast<int>(b.node.size()));
    return ray_prefix == b.node;
  }

  if (p.kind == SubspacePoint::Kind::Node) {
    return nodes_same_component(p.node_path, b.node, b.deleted_edges);
  }
  // The end lives in the component of its tail past the deepest crossed edge.
  size_t deepest = 0;
  for (const auto& edge : b.deleted_edges) {
    if (ray_path_at(p.ray, static_cast<int>(edge.size())) == edge) {
      deepest = std::max(deepest, edge.size());
    }
  }
  auto tail_node = ray_path_at(p.ray, static_cast<int>(deepest));
  return nodes_same_component(tail_node, b.node, b.deleted_edges);
}

double EndDistance::value() const { return indistinguishable ? 0.0 : std::ldexp(1.0, -exponent); }

EndDistance end_distance(const SymbolicTree& t, const SubspacePoint& p, const SubspacePoint& q,
                         int max_depth) {
  (void)t;
  if (p.kind != SubspacePoint::Kind::End || q.kind != SubspacePoint::Kind::End) {
    throw Error("notanend", "end_distance is defined on end points only");
  }
  auto a = ray_path_at(p.ray, max_depth);
  auto b = ray_path_at(q.ray, max_depth);
  for (int i = 0; i < max_depth; ++i) {
    if (a[i] != b[i]) {
      EndDistance d;
      d.exponent = i;
      return d;
    }
  }
  EndDistance d;
  d.exponent = max_depth;
  d.indistinguishable = true;
  return d;
}

namespace {

// Specs reachable from the root through children, spines and bulk patterns.
std::vector<char> reachable_specs(const SymbolicTree& t) {
  std::vector<char> seen(t.specs.size(), 0);
  std::vector<int> stack{t.root};
  seen[t.root] = 1;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    auto visit = [&](int c) {
      if (c >= 0 && !seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    };
    for (int c : t.spec(s).children) visit(c);
    visit(t.spec(s).spine);
    for (const BulkGroup& b : t.spec(s).bulks) visit(b.pattern);
  }
  return seen;
}

// Fixed points over the spec reference graph: which specs unfold to a
// subtree containing a marked node, and which have infinite descent (reach
// a reference cycle; spine chains always do).
void compute_meets(const SymbolicTree& t, std::vector<char>& marked_below,
                   std::vector<char>& infinite_below) {
  int n = static_cast<int>(t.specs.size());
  std::vector<std::vector<int>> refs(n);
  for (int s = 0; s < n; ++s) {
    for (int c : t.spec(s).children) refs[s].push_back(c);
    if (t.spec(s).spine >= 0) refs[s].push_back(t.spec(s).spine);
    for (const BulkGroup& b : t.spec(s).bulks) refs[s].push_back(b.pattern);
  }

  marked_below.assign(n, 0);
  for (int s = 0; s < n; ++s) marked_below[s] = t.spec(s).marked;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < n; ++s) {
      if (marked_below[s]) continue;
      for (int c : refs[s]) {
        if (marked_below[c]) {
          marked_below[s] = 1;
          changed = true;
          break;
        }
      }
    }
  }

  // Infinite descent: a reference cycle is reachable. Greatest fixed point
  // of "some reference still qualifies"; cycle members keep each other alive.
  infinite_below.assign(n, 1);
  changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < n; ++s) {
      if (!infinite_below[s]) continue;
      bool any = false;
      for (int c : refs[s]) {
        if (infinite_below[c]) {
          any = true;
          break;
        }
      }
      if (!any) {
        infinite_below[s] = 0;
        changed = true;
      }
    }
  }
}

}  // namespace

bool subtree_meets_x(const SymbolicTree& t, int spec) {
  std::vector<char> marked_below, infinite_below;
  compute_meets(t, marked_below, infinite_below);
  return marked_below[spec] || infinite_below[spec];
}

std::vector<char> marked_below_table(const SymbolicTree& t) {
  std::vector<char> marked_below, infinite_below;
  compute_meets(t, marked_below, infinite_below);
  return marked_below;
}

std::vector<char> infinite_below_table(const SymbolicTree& t) {
  std::vector<char> marked_below, infinite_below;
  compute_meets(t, marked_below, infinite_below);
  return infinite_below;
}

MetrizabilityVerdict is_first_countable(const SymbolicTree& t, bool include_all_ends) {
  if (!include_all_ends) {
    throw Error("unsupported",
                "the criterion is implemented for X containing all ends of T only");
  }
  std::string err = t.validate();
  if (!err.empty()) throw Error("badtree", err);

  std::vector<char> marked_below, infinite_below;
  compute_meets(t, marked_below, infinite_below);
  auto reachable = reachable_specs(t);

  MetrizabilityVerdict verdict;
  for (int s = 0; s < static_cast<int>(t.specs.size()); ++s) {
    if (!reachable[s] || !t.spec(s).marked) continue;
    for (size_t b = 0; b < t.spec(s).bulks.size(); ++b) {
      const BulkGroup& group = t.spec(s).bulks[b];
      int pat = group.pattern;
      if (group.card == Card::Uncountable && (marked_below[pat] || infinite_below[pat])) {
        // Shortest path from the root to a node with this spec, expanding
        // child addresses in ascending order.
        std::map<int, std::vector<int>> path_to{{t.root, {}}};
        std::deque<int> queue{t.root};
        while (!queue.empty() && !path_to.count(s)) {
          int cur = queue.front();
          queue.pop_front();
          for (int a : realized_addresses(t, cur, 1)) {
            int c = t.child_spec(cur, a);
            if (c >= 0 && !path_to.count(c)) {
              auto p = path_to[cur];
              p.push_back(a);
              path_to[c] = std::move(p);
              queue.push_back(c);
            }
          }
        }
        MetrizabilityWitness w;
        w.node_path = path_to[s];
        w.spec = s;
        w.bulk_index = static_cast<int>(b);
        verdict.metrizable = false;
        verdict.witness = std::move(w);
        return verdict;
      }
    }
  }
  return verdict;
}

std::vector<int> relevant_child_addresses(const SymbolicTree& t, int spec, int count) {
  std::vector<char> marked_below, infinite_below;
  compute_meets(t, marked_below, infinite_below);
  const NodeSpec& n = t.spec(spec);
  std::vector<int> out;
  int base = 0;
  auto push_if = [&](int address, int child) {
    if (static_cast<int>(out.size()) < count && (marked_below[child] || infinite_below[child])) {
      out.push_back(address);
    }
  };
  for (size_t i = 0; i < n.children.size(); ++i) push_if(base + static_cast<int>(i), n.children[i]);
  base += static_cast<int>(n.children.size());
  if (n.spine >= 0) {
    push_if(base, n.spine);
    base += 1;
  }
  for (const BulkGroup& b : n.bulks) {
    if (b.card == Card::Finite) {
      for (int j = 0; j < b.finite_count; ++j) push_if(base + j, b.pattern);
      base += b.finite_count;
    } else {
      int j = 0;
      while (static_cast<int>(out.size()) < count &&
             (marked_below[b.pattern] || infinite_below[b.pattern])) {
        out.push_back(base + j);
        ++j;
      }
      break;
    }
  }
  return out;
}

BasicOpen neighbourhood_base_element(const SymbolicTree& t, const std::vector<int>& x, int n) {
  int s = t.spec_at(x);
  if (!t.spec(s).marked) throw Error("notmarked", "base elements are built at marked nodes");
  std::vector<std::vector<int>> deleted;
  if (!x.empty()) deleted.push_back(x);  // the parent edge (absent at the root)
  for (int a : relevant_child_addresses(t, s, n)) {
    std::vector<int> child = x;
    child.push_back(a);
    deleted.push_back(std::move(child));
  }
  return tree_component(std::move(deleted), x);
}

}  // namespace edgecut
