#include "edgecut/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace edgecut {

namespace {

bool is_prefix(const std::vector<int>& shorter, const std::vector<int>& longer) {
  if (shorter.size() > longer.size()) return false;
  return std::equal(shorter.begin(), shorter.end(), longer.begin());
}

}  // namespace

PresentedGraph build_gx(const SymbolicTree& t) {
  std::string err = t.validate();
  if (!err.empty()) throw Error("badtree", err);

  PresentedGraph pg;
  pg.base = t;
  int leaf = -1;
  for (int s = 0; s < static_cast<int>(pg.base.specs.size()); ++s) {
    if (!pg.base.spec(s).marked) continue;
    if (pg.base.child_count(s) >= 0) {
      // Finite explicit degree: pad with a countable group of bare leaves
      // before selecting the ray children.
      if (leaf < 0) {
        leaf = static_cast<int>(pg.base.specs.size());
        pg.base.specs.push_back(NodeSpec{});
      }
      BulkGroup pad;
      pad.card = Card::Countable;
      pad.pattern = leaf;
      pg.base.specs[s].bulks.push_back(pad);
      pg.padded_specs.push_back(s);
    }
  }
  return pg;
}

std::string gx_vertex_name(const std::vector<int>& path) {
  std::string name = "r";
  for (int a : path) name += "." + std::to_string(a);
  return name;
}

RealizedGx realize_gx(const PresentedGraph& pg, int depth, int witness) {
  RealizedGx out;
  out.tree = truncate(pg.base, depth, witness);

  std::vector<std::pair<std::string, std::string>> pairs;
  for (size_t i = 1; i < out.tree.nodes.size(); ++i) {
    pairs.emplace_back(gx_vertex_name(out.tree.nodes[out.tree.nodes[i].parent].path),
                       gx_vertex_name(out.tree.nodes[i].path));
  }
  int tree_edge_count = static_cast<int>(pairs.size());
  // Ray edges: consecutive realized children, in selection (= address)
  // order, at every realized marked node.
  for (const auto& node : out.tree.nodes) {
    if (!node.marked) continue;
    for (size_t j = 0; j + 1 < node.children.size(); ++j) {
      pairs.emplace_back(gx_vertex_name(out.tree.nodes[node.children[j]].path),
                         gx_vertex_name(out.tree.nodes[node.children[j + 1]].path));
    }
  }
  out.graph = MultiGraph::build(pairs, {gx_vertex_name({})});
  for (EdgeIdx e = 0; e < out.graph.edge_count(); ++e) {
    (e < tree_edge_count ? out.tree_edges : out.ray_edges).push_back(e);
  }
  return out;
}

PhiResult phi(const PresentedGraph& pg, const GxRay& ray, int depth) {
  if (depth < 0) throw Error("badk", "phi requires depth >= 0");
  PhiResult result;
  result.resolved_depth = depth;

  if (ray.tail == GxRay::Tail::Descend) {
    end_point(pg.base, ray.descend);  // validates the rooted ray
    // Arrows chase the tail downward past every depth.
    result.kind = PhiResult::Kind::PartialEnd;
    result.path = ray_path_at(ray.descend, depth);
    return result;
  }

  int s = pg.base.spec_at(ray.anchor);
  if (!pg.base.spec(s).marked) {
    throw Error("badray", "sibling-chain tail requires a marked anchor");
  }
  if (ray.start_index < 1) throw Error("badray", "selection position must be >= 1");
  // Every base-tree cut orients toward the anchor: the tail runs through
  // the anchor's children with unboundedly growing addresses, so it stays
  // on the anchor's side of every cut not at the anchor, and eventually
  // leaves the subtree below each single child.
  if (static_cast<int>(ray.anchor.size()) <= depth) {
    result.kind = PhiResult::Kind::NodePoint;
    result.path = ray.anchor;
  } else {
    result.kind = PhiResult::Kind::PartialEnd;
    result.path = std::vector<int>(ray.anchor.begin(), ray.anchor.begin() + depth);
  }
  return result;
}

// ---------------------------------------------------------------------------
// T' construction
// ---------------------------------------------------------------------------

namespace {

struct AddressClass {
  // Finite relevant/irrelevant addresses with their child specs, plus the
  // (single possible) infinite tail, classified once per spec.
  std::vector<int> rel_addrs;
  std::vector<int> rel_specs;
  std::vector<int> irr_addrs;
  std::vector<int> irr_specs;
  bool infinite_relevant = false;
  int infinite_base = 0;
  int infinite_pattern = -1;
  bool irrelevant_bulk = false;
  int irrelevant_bulk_base = 0;
  int irrelevant_bulk_pattern = -1;
  Card infinite_card = Card::Countable;
};

AddressClass classify_addresses(const SymbolicTree& t, int s, const std::vector<char>& meets) {
  AddressClass out;
  const NodeSpec& n = t.spec(s);
  int base = 0;
  auto finite_entry = [&](int address, int child) {
    if (meets[child]) {
      out.rel_addrs.push_back(address);
      out.rel_specs.push_back(child);
    } else {
      out.irr_addrs.push_back(address);
      out.irr_specs.push_back(child);
    }
  };
  for (size_t i = 0; i < n.children.size(); ++i) finite_entry(base++, n.children[i]);
  if (n.spine >= 0) finite_entry(base++, n.spine);
  for (const BulkGroup& b : n.bulks) {
    if (b.card == Card::Finite) {
      for (int j = 0; j < b.finite_count; ++j) finite_entry(base++, b.pattern);
    } else if (meets[b.pattern]) {
      out.infinite_relevant = true;
      out.infinite_base = base;
      out.infinite_pattern = b.pattern;
      out.infinite_card = b.card;
    } else {
      out.irrelevant_bulk = true;
      out.irrelevant_bulk_base = base;
      out.irrelevant_bulk_pattern = b.pattern;
      out.infinite_card = b.card;
    }
  }
  return out;
}

}  // namespace

TPrimeMap build_tprime_map(const SymbolicTree& t) {
  MetrizabilityVerdict verdict = is_first_countable(t, true);
  if (!verdict.metrizable) throw NotMetrizableError(*verdict.witness);

  auto marked_below = marked_below_table(t);
  auto infinite_below = infinite_below_table(t);
  std::vector<char> meets(t.specs.size(), 0);
  for (size_t i = 0; i < t.specs.size(); ++i) meets[i] = marked_below[i] || infinite_below[i];

  TPrimeMap map;
  map.source = &t;
  int old_n = static_cast<int>(t.specs.size());
  map.image_spec.assign(old_n, -1);
  map.spines.assign(old_n, {});

  SymbolicTree& tp = map.tprime;
  auto alloc = [&tp]() {
    tp.specs.push_back(NodeSpec{});
    return static_cast<int>(tp.specs.size()) - 1;
  };

  int bare = -1;  // shared bare spine tail (an unadorned infinite ray)
  auto need_bare = [&]() {
    if (bare < 0) {
      bare = alloc();
      tp.specs[bare].spine = bare;
    }
    return bare;
  };

  // Pass 1: allocate images so cyclic references resolve.
  std::vector<AddressClass> cls(old_n);
  for (int s = 0; s < old_n; ++s) {
    cls[s] = classify_addresses(t, s, meets);
    if (!t.spec(s).marked) {
      map.image_spec[s] = alloc();
      continue;
    }
    TPrimeMap::SpineInfo& info = map.spines[s];
    info.relevant_addresses = cls[s].rel_addrs;
    info.infinite_relevant = cls[s].infinite_relevant;
    info.infinite_base = cls[s].infinite_base;
    info.irrelevant_addresses = cls[s].irr_addrs;
    info.irrelevant_bulk = cls[s].irrelevant_bulk;
    info.irrelevant_bulk_base = cls[s].irrelevant_bulk_base;
    int nq = std::max<int>(static_cast<int>(cls[s].rel_addrs.size()), 1);
    for (int i = 0; i < nq; ++i) info.q.push_back(alloc());
    info.tail = cls[s].infinite_relevant ? alloc() : need_bare();
    map.image_spec[s] = info.q.front();
  }

  // Pass 2: fill contents.
  auto ref = [&map](int old_spec) { return map.image_spec[old_spec]; };
  for (int s = 0; s < old_n; ++s) {
    const NodeSpec& old_spec = t.spec(s);
    const AddressClass& c = cls[s];
    if (!old_spec.marked) {
      NodeSpec& fresh = tp.specs[map.image_spec[s]];
      for (int ch : old_spec.children) fresh.children.push_back(ref(ch));
      fresh.spine = old_spec.spine >= 0 ? ref(old_spec.spine) : -1;
      for (const BulkGroup& b : old_spec.bulks) {
        BulkGroup nb = b;
        nb.pattern = ref(b.pattern);
        fresh.bulks.push_back(nb);
      }
      continue;
    }

    const TPrimeMap::SpineInfo& info = map.spines[s];
    int nq = static_cast<int>(info.q.size());
    for (int i = 0; i < nq; ++i) {
      NodeSpec& qn = tp.specs[info.q[i]];
      if (i < static_cast<int>(c.rel_addrs.size())) {
        qn.children.push_back(ref(c.rel_specs[i]));
      } else if (i == 0 && c.infinite_relevant) {
        qn.children.push_back(ref(c.infinite_pattern));  // rank 1 from the tail
      }
      if (i == 0) {
        for (int irr : c.irr_specs) qn.children.push_back(ref(irr));
        if (c.irrelevant_bulk) {
          BulkGroup nb;
          nb.card = c.infinite_card;
          nb.pattern = ref(c.irrelevant_bulk_pattern);
          qn.bulks.push_back(nb);
        }
      }
      qn.spine = i + 1 < nq ? info.q[i + 1] : info.tail;
    }
    if (c.infinite_relevant) {
      NodeSpec& tail = tp.specs[info.tail];
      tail.children.push_back(ref(c.infinite_pattern));
      tail.spine = info.tail;
    }
  }
  tp.root = map.image_spec[t.root];

  std::string err = tp.validate();
  if (!err.empty()) throw Error("internal", "T' construction produced a bad tree: " + err);
  return map;
}

SymbolicTree build_tprime(const SymbolicTree& t) { return build_tprime_map(t).tprime; }

std::vector<int> TPrimeMap::step_suffix(int t_spec, int address) const {
  const SymbolicTree& t = *source;
  if (!t.spec(t_spec).marked) return {address};
  const SpineInfo& info = spines[t_spec];
  int nq = static_cast<int>(info.q.size());
  bool has_rank1 = !info.relevant_addresses.empty() || info.infinite_relevant;
  auto spine_addr = [this](int spec) {
    return static_cast<int>(tprime.spec(spec).children.size());
  };

  // Relevant rank, if the address is relevant (1-based).
  int rank = 0;
  auto it = std::find(info.relevant_addresses.begin(), info.relevant_addresses.end(), address);
  if (it != info.relevant_addresses.end()) {
    rank = static_cast<int>(it - info.relevant_addresses.begin()) + 1;
  } else if (info.infinite_relevant && address >= info.infinite_base) {
    rank = static_cast<int>(info.relevant_addresses.size()) + (address - info.infinite_base) + 1;
  }
  if (rank > 0) {
    std::vector<int> suffix;
    for (int i = 1; i < rank; ++i) {
      int holder = i <= nq ? info.q[i - 1] : info.tail;
      suffix.push_back(spine_addr(holder));
    }
    suffix.push_back(0);  // the hanging subtree sits first at its holder
    return suffix;
  }

  // Irrelevant finite child: hangs at q_1 after the rank-1 subtree.
  auto jt = std::find(info.irrelevant_addresses.begin(), info.irrelevant_addresses.end(), address);
  if (jt != info.irrelevant_addresses.end()) {
    int j = static_cast<int>(jt - info.irrelevant_addresses.begin());
    return {(has_rank1 ? 1 : 0) + j};
  }
  // Irrelevant bulk member: q_1's bulk group, addressed past its spine.
  if (info.irrelevant_bulk && address >= info.irrelevant_bulk_base) {
    int j = address - info.irrelevant_bulk_base;
    int q1_children = static_cast<int>(tprime.spec(info.q[0]).children.size());
    return {q1_children + 1 + j};
  }
  throw Error("badpath", "address names no child of the marked node");
}

std::vector<int> TPrimeMap::map_path(const std::vector<int>& t_path) const {
  const SymbolicTree& t = *source;
  std::vector<int> out;
  int s = t.root;
  for (int a : t_path) {
    auto suffix = step_suffix(s, a);
    out.insert(out.end(), suffix.begin(), suffix.end());
    s = t.child_spec(s, a);
    if (s < 0) throw Error("badpath", "path leaves the tree");
  }
  return out;
}

RaySpec TPrimeMap::spine_ray(const std::vector<int>& marked_path) const {
  const SymbolicTree& t = *source;
  int s = t.spec_at(marked_path);
  if (!t.spec(s).marked) throw Error("notmarked", "spine_ray requires a marked node");
  RaySpec ray;
  ray.prefix = map_path(marked_path);
  int cur = image_spec[s];
  while (tprime.spec(cur).spine != cur) {
    ray.prefix.push_back(static_cast<int>(tprime.spec(cur).children.size()));
    cur = tprime.spec(cur).spine;
  }
  ray.period = {static_cast<int>(tprime.spec(cur).children.size())};
  return ray;
}

// ---------------------------------------------------------------------------
// Truncation-level verification of h
// ---------------------------------------------------------------------------

namespace {

// A realized X point of T: a marked node, or an end direction bundled at a
// frontier node with infinite descent.
struct RealizedPoint {
  bool is_node = true;
  std::vector<int> t_path;
  // image: a T' ray for nodes, a T' node path for direction bundles
  bool image_is_ray = false;
  RaySpec image_ray;
  std::vector<int> image_path;
};

// X meets the subtree STRICTLY below a spec: some referenced child subtree
// holds a marked node or an end. Bulk uniformity means the check is
// witness-independent.
bool x_strictly_below(const SymbolicTree& t, int spec, const std::vector<char>& marked_below,
                      const std::vector<char>& infinite_below) {
  const NodeSpec& n = t.spec(spec);
  auto meets = [&](int c) { return c >= 0 && (marked_below[c] || infinite_below[c]); };
  for (int c : n.children) {
    if (meets(c)) return true;
  }
  if (meets(n.spine)) return true;
  for (const BulkGroup& b : n.bulks) {
    if (meets(b.pattern)) return true;
  }
  return false;
}

std::vector<RealizedPoint> realized_x_points(const SymbolicTree& t, const TPrimeMap& map,
                                             const FiniteTree& ft) {
  auto marked_below = marked_below_table(t);
  auto infinite_below = infinite_below_table(t);
  std::vector<RealizedPoint> out;
  for (const auto& node : ft.nodes) {
    if (node.marked) {
      RealizedPoint p;
      p.is_node = true;
      p.t_path = node.path;
      p.image_is_ray = true;
      p.image_ray = map.spine_ray(node.path);
      out.push_back(std::move(p));
    }
    // Frontier bundle: all X points strictly below the cut-off node.
    if (static_cast<int>(node.path.size()) == ft.depth &&
        x_strictly_below(t, node.spec, marked_below, infinite_below)) {
      RealizedPoint p;
      p.is_node = false;
      p.t_path = node.path;
      p.image_is_ray = false;
      p.image_path = map.map_path(node.path);
      out.push_back(std::move(p));
    }
  }
  return out;
}

// Walks a T' path backwards into T territory, tracking whether every
// consumed T child address is materialized at this witness budget. Returns
// false when the path depends on a part of T outside the truncation scale
// (deep selection ranks, unsampled bulk members).
bool tprime_path_in_t_scale(const TPrimeMap& map, const std::vector<int>& tp_path, int witness) {
  const SymbolicTree& t = *map.source;
  bool on_spine = false;
  int t_spec = t.root;
  int rank = 0;
  int holder = -1;  // current T' spec while on a spine
  auto enter = [&](int t_child) {
    if (t.spec(t_child).marked) {
      on_spine = true;
      t_spec = t_child;
      rank = 1;
      holder = map.image_spec[t_child];
    } else {
      on_spine = false;
      t_spec = t_child;
    }
  };
  if (t.spec(t_spec).marked) enter(t_spec);
  for (int a : tp_path) {
    if (!on_spine) {
      if (!address_realized(t, t_spec, a, witness)) return false;
      int child = t.child_spec(t_spec, a);
      if (child < 0) throw Error("internal", "back-walk fell off T");
      enter(child);
      continue;
    }
    const TPrimeMap::SpineInfo& info = map.spines[t_spec];
    const NodeSpec& h = map.tprime.spec(holder);
    int spine_addr = static_cast<int>(h.children.size());
    if (a == spine_addr) {
      rank += 1;
      holder = h.spine;
      continue;
    }
    int finite_rel = static_cast<int>(info.relevant_addresses.size());
    bool has_rank_here = (rank <= finite_rel) || info.infinite_relevant;
    if (a == 0 && has_rank_here && !h.children.empty()) {
      int t_address = rank <= finite_rel
                          ? info.relevant_addresses[rank - 1]
                          : info.infinite_base + (rank - finite_rel - 1);
      if (!address_realized(t, t_spec, t_address, witness)) return false;
      int child = t.child_spec(t_spec, t_address);
      enter(child);
      continue;
    }
    if (rank == 1) {
      int base = has_rank_here ? 1 : 0;
      int irr = static_cast<int>(info.irrelevant_addresses.size());
      if (a >= base && a < base + irr) {
        int t_address = info.irrelevant_addresses[a - base];
        if (!address_realized(t, t_spec, t_address, witness)) return false;
        enter(t.child_spec(t_spec, t_address));
        continue;
      }
      if (info.irrelevant_bulk && a > spine_addr) {
        int j = a - spine_addr - 1;
        if (j >= witness) return false;
        enter(t.child_spec(t_spec, info.irrelevant_bulk_base + j));
        continue;
      }
    }
    throw Error("internal", "back-walk decoded an impossible T' address");
  }
  return true;
}

// Definitive three-way membership of a realized point in a basic open of T:
// 1 = in, 0 = out, -1 = ambiguous at this scale (direction bundles split by
// an edge below the bundle's node).
int point_in_open(const SymbolicTree& t, const BasicOpen& open, const RealizedPoint& p) {
  if (p.is_node) {
    SubspacePoint sp;
    sp.kind = SubspacePoint::Kind::Node;
    sp.node_path = p.t_path;
    return basic_open_membership(t, open, sp) ? 1 : 0;
  }
  if (open.kind == BasicOpen::Kind::UpClosure) {
    if (is_prefix(open.node, p.t_path)) return 1;
    if (is_prefix(p.t_path, open.node)) return -1;  // the bundle splits
    return 0;
  }
  for (const auto& edge : open.deleted_edges) {
    if (edge.size() > p.t_path.size() && is_prefix(p.t_path, edge)) return -1;
  }
  SubspacePoint sp;  // no deleted edge below the bundle: the node decides
  sp.kind = SubspacePoint::Kind::Node;
  sp.node_path = p.t_path;
  return basic_open_membership(t, open, sp) ? 1 : 0;
}

// Definitive three-way "image lies in the up-closure of a T' node".
int image_in_upclosure(const RealizedPoint& p, const std::vector<int>& tp_node) {
  if (p.image_is_ray) {
    return ray_path_at(p.image_ray, static_cast<int>(tp_node.size())) == tp_node ? 1 : 0;
  }
  if (is_prefix(tp_node, p.image_path)) return 1;
  if (is_prefix(p.image_path, tp_node)) return -1;
  return 0;
}

}  // namespace

HomeoReport check_homeomorphism_witness(const SymbolicTree& t, const SymbolicTree& tprime,
                                        int depth, int witness) {
  TPrimeMap map = build_tprime_map(t);
  if (tprime.specs.size() != map.tprime.specs.size()) {
    throw Error("badtree", "supplied T' does not match build_tprime(T)");
  }
  HomeoReport report;
  report.depth = depth;
  report.witness = witness;

  FiniteTree ft = truncate(t, depth, witness);
  auto points = realized_x_points(t, map, ft);

  auto check_maps_into = [&](const BasicOpen& domain, const std::vector<int>& tp_node,
                             HomeoWitnessEntry& entry) {
    for (const auto& p : points) {
      int inside = point_in_open(t, domain, p);
      if (inside != 1) continue;
      if (image_in_upclosure(p, tp_node) != 1) {
        entry.ok = false;
        entry.note = "point escapes the image open";
        return;
      }
    }
  };

  // Continuity, plain case: T' opens at images of unmarked T nodes are
  // preimaged by the parent edge of the node.
  for (const auto& node : ft.nodes) {
    if (node.path.empty()) continue;
    if (t.spec(node.spec).marked) continue;  // handled by the spine case
    auto tp_node = map.map_path(node.path);
    if (static_cast<int>(tp_node.size()) > depth) continue;
    HomeoWitnessEntry entry;
    entry.kind = "continuity";
    entry.tprime_node = tp_node;
    entry.f_edges = {node.path};
    check_maps_into(up_closure(node.path), tp_node, entry);
    if (!entry.ok) ++report.failures;
    report.entries.push_back(std::move(entry));
  }

  // Continuity, spine case: the open at the n-th spine node of a marked x
  // is preimaged by {parent edge of x} + the first n relevant child edges.
  for (const auto& node : ft.nodes) {
    if (!node.marked) continue;
    auto head = map.map_path(node.path);
    std::vector<int> tau = head;
    int spec = map.image_spec[node.spec];
    for (int n = 1; static_cast<int>(tau.size()) <= depth; ++n) {
      std::vector<std::vector<int>> f;
      if (!node.path.empty()) f.push_back(node.path);
      for (int a : relevant_child_addresses(t, node.spec, n)) {
        auto child = node.path;
        child.push_back(a);
        f.push_back(std::move(child));
      }
      HomeoWitnessEntry entry;
      entry.kind = "continuity";
      entry.tprime_node = tau;
      entry.f_edges = f;
      check_maps_into(tree_component(f, node.path), tau, entry);
      if (!entry.ok) ++report.failures;
      report.entries.push_back(std::move(entry));

      tau.push_back(static_cast<int>(map.tprime.spec(spec).children.size()));
      spec = map.tprime.spec(spec).spine;
    }
  }

  // Openness: around every realized X point, a T' basic open whose h-preimage
  // stays inside the exhibited T open.
  for (const auto& p : points) {
    HomeoWitnessEntry entry;
    entry.kind = "openness";
    BasicOpen domain = up_closure(p.t_path);
    std::vector<int> tp_open;
    if (p.is_node) {
      int n = 1;
      domain = neighbourhood_base_element(t, p.t_path, n);
      entry.f_edges = domain.deleted_edges;
      // the (n+1)-th spine node lies past every child edge of the base element
      tp_open = ray_path_at(map.spine_ray(p.t_path),
                            static_cast<int>(map.map_path(p.t_path).size()) + n + 1);
    } else {
      entry.f_edges = {p.t_path};
      tp_open = p.image_path;
    }
    entry.tprime_node = tp_open;
    for (const auto& q : points) {
      int premise = image_in_upclosure(q, tp_open);
      if (premise != 1) continue;
      if (point_in_open(t, domain, q) == 0) {
        entry.ok = false;
        entry.note = "T' open leaks outside the image of the T open";
        break;
      }
    }
    if (!entry.ok) ++report.failures;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

HBijectionReport check_h_bijection(const SymbolicTree& t, int depth, int witness) {
  HBijectionReport report;
  TPrimeMap map = build_tprime_map(t);
  FiniteTree ft = truncate(t, depth, witness);
  auto points = realized_x_points(t, map, ft);
  report.x_points = static_cast<int>(points.size());

  // Image validity.
  for (const auto& p : points) {
    if (p.image_is_ray) {
      end_point(map.tprime, p.image_ray);
    } else {
      map.tprime.spec_at(p.image_path);
    }
  }

  // Pairwise distinguishability. The only admissible prefix collision is a
  // marked frontier node against its own direction bundle (the spine end
  // versus the ends leaving the spine deeper down).
  int horizon = depth + 2;
  for (const auto& p : points) {
    if (p.image_is_ray) {
      horizon = std::max(horizon, static_cast<int>(p.image_ray.prefix.size()) + 2);
    } else {
      horizon = std::max(horizon, static_cast<int>(p.image_path.size()) + 2);
    }
  }
  for (size_t i = 0; i < points.size() && report.ok; ++i) {
    for (size_t j = i + 1; j < points.size() && report.ok; ++j) {
      const auto& a = points[i];
      const auto& b = points[j];
      if (a.image_is_ray && b.image_is_ray) {
        if (ray_path_at(a.image_ray, horizon) == ray_path_at(b.image_ray, horizon)) {
          report.ok = false;
          report.failure = "two node points share a spine image";
        }
      } else if (!a.image_is_ray && !b.image_is_ray) {
        if (is_prefix(a.image_path, b.image_path) || is_prefix(b.image_path, a.image_path)) {
          report.ok = false;
          report.failure = "two direction bundles share an image branch";
        }
      } else {
        const auto& node = a.image_is_ray ? a : b;
        const auto& stub = a.image_is_ray ? b : a;
        auto ray_prefix = ray_path_at(node.image_ray, static_cast<int>(stub.image_path.size()));
        if (ray_prefix == stub.image_path && node.t_path != stub.t_path) {
          report.ok = false;
          report.failure = "a spine image collides with a foreign direction bundle";
        }
      }
    }
  }

  // Covering: every realized T' end direction at the same scale lies on
  // some image.
  FiniteTree ftp = truncate(map.tprime, depth, witness);
  auto tp_infinite = infinite_below_table(map.tprime);
  for (const auto& node : ftp.nodes) {
    if (static_cast<int>(node.path.size()) != depth || !tp_infinite[node.spec]) continue;
    // Directions whose preimage needs unsampled parts of T (deeper selection
    // ranks than the witness budget realizes) are out of scale here.
    if (!tprime_path_in_t_scale(map, node.path, witness)) continue;
    bool covered = false;
    for (const auto& p : points) {
      if (p.image_is_ray) {
        if (ray_path_at(p.image_ray, depth) == node.path) {
          covered = true;
          break;
        }
      } else if (is_prefix(node.path, p.image_path) || is_prefix(p.image_path, node.path)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      report.ok = false;
      report.failure = "uncovered T' end direction at " + gx_vertex_name(node.path);
      break;
    }
    ++report.covered_stubs;
  }
  return report;
}

}  // namespace edgecut
