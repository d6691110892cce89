#include "edgecut/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace edgecut {

namespace {

std::vector<std::string> vertex_names(const MultiGraph& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(g.vertex_name(v));
  return out;
}

std::vector<std::string> edge_names(const MultiGraph& g, const std::vector<EdgeIdx>& es) {
  std::vector<std::string> out;
  for (EdgeIdx e : es) out.push_back(g.edge_name(e));
  return out;
}

std::vector<EdgeIdx> edges_from_names(const MultiGraph& g, const Json& j) {
  std::vector<EdgeIdx> out;
  for (const auto& name : j) out.push_back(g.edge(name.get<std::string>()));
  return out;
}

std::vector<Vertex> vertices_from_names(const MultiGraph& g, const Json& j) {
  std::vector<Vertex> out;
  for (const auto& name : j) out.push_back(g.vertex(name.get<std::string>()));
  return out;
}

Json path_json(const MultiGraph& g, const Path& p) {
  return Json{{"vertices", vertex_names(g, p.vertices)}, {"edges", edge_names(g, p.edges)}};
}

Path path_from_json_obj(const MultiGraph& g, const Json& j) {
  Path p;
  p.vertices = vertices_from_names(g, j.at("vertices"));
  p.edges = edges_from_names(g, j.at("edges"));
  return p;
}

}  // namespace

// --- graphs -----------------------------------------------------------------

MultiGraph graph_from_json(const Json& j) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> isolated;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error("badformat", "edge entries must be pairs");
      pairs.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  if (j.contains("vertices")) {
    for (const auto& v : j.at("vertices")) isolated.push_back(v.get<std::string>());
  }
  return MultiGraph::build(pairs, isolated);
}

MultiGraph graph_from_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long long n = -1, m = -1;
  std::vector<std::pair<std::string, std::string>> pairs;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (!(ls >> kind >> n >> m) || n < 0 || m < 0) {
        throw Error("badformat", "bad problem line: " + line);
      }
      continue;
    }
    if (tag == "e") {
      long long u, v;
      if (!(ls >> u >> v)) throw Error("badformat", "bad edge line: " + line);
      if (n < 0) throw Error("badformat", "edge line before problem line");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw Error("badformat", "edge endpoint out of range: " + line);
      }
      pairs.emplace_back(std::to_string(u), std::to_string(v));
      continue;
    }
    throw Error("badformat", "unrecognized line: " + line);
  }
  if (n < 0) throw Error("badformat", "missing problem line");
  if (static_cast<long long>(pairs.size()) != m) {
    throw Error("badformat", "edge count disagrees with header");
  }
  std::vector<std::string> isolated;
  for (long long v = 1; v <= n; ++v) isolated.push_back(std::to_string(v));
  return MultiGraph::build(pairs, isolated);
}

MultiGraph graph_from_text(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return graph_from_json(Json::parse(text));
    break;
  }
  return graph_from_dimacs(text);
}

Json graph_to_json(const MultiGraph& g) {
  Json edges = Json::array();
  for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    edges.push_back({g.vertex_name(u), g.vertex_name(v)});
  }
  Json vertices = Json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex_name(v));
  return Json{{"schema", "edgecut/graph/v1"}, {"vertices", vertices}, {"edges", edges}};
}

std::string graph_to_dot(const MultiGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << g.vertex_name(v) << "\";\n";
  }
  for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    out << "  \"" << g.vertex_name(u) << "\" -- \"" << g.vertex_name(v) << "\" [label=\""
        << g.edge_name(e) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

// --- symbolic trees ----------------------------------------------------------

namespace {

Card card_from_string(const std::string& s, int& finite_count) {
  if (s == "countable") return Card::Countable;
  if (s == "uncountable") return Card::Uncountable;
  if (s.rfind("finite:", 0) == 0) {
    finite_count = std::stoi(s.substr(7));
    return Card::Finite;
  }
  throw Error("badformat", "unknown cardinality tag: " + s);
}

std::string card_to_string(const BulkGroup& b) {
  switch (b.card) {
    case Card::Finite:
      return "finite:" + std::to_string(b.finite_count);
    case Card::Countable:
      return "countable";
    default:
      return "uncountable";
  }
}

int parse_tree_node(const Json& j, SymbolicTree& t) {
  if (!j.is_object()) throw Error("badformat", "tree nodes must be objects");
  int s = static_cast<int>(t.specs.size());
  t.specs.push_back(NodeSpec{});
  t.specs[s].marked = j.value("marked", false);
  if (j.contains("children")) {
    for (const auto& c : j.at("children")) {
      int child = parse_tree_node(c, t);
      t.specs[s].children.push_back(child);
    }
  }
  if (j.contains("ray") && !j.at("ray").is_null()) {
    const Json& r = j.at("ray");
    std::vector<int> chain;
    if (r.contains("prefix")) {
      for (const auto& p : r.at("prefix")) chain.push_back(parse_tree_node(p, t));
    }
    std::vector<int> period;
    if (!r.contains("period") || r.at("period").empty()) {
      throw Error("badformat", "ray needs a nonempty period");
    }
    for (const auto& p : r.at("period")) period.push_back(parse_tree_node(p, t));
    std::vector<int> seq = chain;
    seq.insert(seq.end(), period.begin(), period.end());
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      if (t.specs[seq[i]].spine >= 0) {
        throw Error("badformat", "ray nodes cannot declare their own ray");
      }
      t.specs[seq[i]].spine = seq[i + 1];
    }
    if (t.specs[seq.back()].spine >= 0) {
      throw Error("badformat", "ray nodes cannot declare their own ray");
    }
    t.specs[seq.back()].spine = period.front();
    t.specs[s].spine = seq.front();
  }
  if (j.contains("bulk") && !j.at("bulk").is_null()) {
    Json groups = j.at("bulk").is_array() ? j.at("bulk") : Json::array({j.at("bulk")});
    for (const auto& gj : groups) {
      BulkGroup b;
      b.card = card_from_string(gj.at("card").get<std::string>(), b.finite_count);
      b.pattern = parse_tree_node(gj.at("pattern"), t);
      t.specs[s].bulks.push_back(b);
    }
  }
  return s;
}

Json emit_tree_node(const SymbolicTree& t, int s, std::set<int>& stack);

Json emit_decorations(const SymbolicTree& t, int s, std::set<int>& stack) {
  const NodeSpec& n = t.spec(s);
  Json j = Json::object();
  if (n.marked) j["marked"] = true;
  if (!n.children.empty()) {
    Json children = Json::array();
    for (int c : n.children) children.push_back(emit_tree_node(t, c, stack));
    j["children"] = children;
  }
  if (!n.bulks.empty()) {
    Json groups = Json::array();
    for (const BulkGroup& b : n.bulks) {
      groups.push_back(Json{{"card", card_to_string(b)},
                            {"pattern", emit_tree_node(t, b.pattern, stack)}});
    }
    j["bulk"] = groups.size() == 1 ? groups[0] : groups;
  }
  return j;
}

Json emit_tree_node(const SymbolicTree& t, int s, std::set<int>& stack) {
  if (stack.count(s)) {
    throw Error("noserialize", "tree has a non-ray cycle; JSON export unsupported");
  }
  stack.insert(s);
  Json j = emit_decorations(t, s, stack);
  if (t.spec(s).spine >= 0) {
    // Unroll the spine chain into prefix + period.
    std::vector<int> seq;
    std::map<int, int> position;
    int cur = t.spec(s).spine;
    while (!position.count(cur)) {
      position[cur] = static_cast<int>(seq.size());
      seq.push_back(cur);
      cur = t.spec(cur).spine;
      if (cur < 0) throw Error("noserialize", "spine chain terminates");
    }
    int start = position[cur];
    Json prefix = Json::array();
    Json period = Json::array();
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
      Json node = emit_decorations(t, seq[i], stack);
      (i < start ? prefix : period).push_back(node);
    }
    Json ray = Json::object();
    if (!prefix.empty()) ray["prefix"] = prefix;
    ray["period"] = period;
    j["ray"] = ray;
  }
  stack.erase(s);
  return j;
}

}  // namespace

SymbolicTree tree_from_json(const Json& j) {
  SymbolicTree t;
  const Json& node = j.contains("tree") ? j.at("tree") : j;
  t.root = parse_tree_node(node, t);
  std::string err = t.validate();
  if (!err.empty()) throw Error("badtree", err);
  return t;
}

Json tree_to_json(const SymbolicTree& t) {
  std::set<int> stack;
  Json j = emit_tree_node(t, t.root, stack);
  j["schema"] = "edgecut/tree/v1";
  return j;
}

PresentedGraph presented_from_json(const Json& j) {
  PresentedGraph pg;
  pg.base = tree_from_json(j.at("base"));
  std::string err = pg.base.validate();
  if (!err.empty()) throw Error("badtree", err);
  return pg;
}

Json presented_to_json(const PresentedGraph& pg) {
  Json j;
  j["schema"] = "edgecut/presented-graph/v1";
  Json base = tree_to_json(pg.base);
  base.erase("schema");
  j["base"] = base;
  // The ray-edge rule is determined by the markings; the list below is a
  // readable digest (one entry per marked spec, smallest occurrence first).
  Json rules = Json::array();
  auto marked_below = marked_below_table(pg.base);
  (void)marked_below;
  std::map<int, std::vector<int>> first_path{{pg.base.root, {}}};
  std::vector<int> queue{pg.base.root};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int s = queue[qi];
    for (int a = 0;; ++a) {
      int c = pg.base.child_spec(s, a);
      if (c < 0) break;
      long long total = pg.base.child_count(s);
      if (total >= 0 && a >= total) break;
      if (!first_path.count(c)) {
        auto p = first_path[s];
        p.push_back(a);
        first_path[c] = std::move(p);
        queue.push_back(c);
      }
      if (total < 0 && a > 8) break;  // infinite tails repeat one pattern
    }
  }
  for (const auto& [s, p] : first_path) {
    if (!pg.base.spec(s).marked) continue;
    Json order = Json::array();
    for (int a = 0; a < 8; ++a) {
      if (pg.base.child_spec(s, a) < 0) break;
      order.push_back(a);
    }
    rules.push_back(Json{{"at", path_to_json(p)}, {"childOrder", order}});
  }
  j["rayEdges"] = rules;
  return j;
}

Json path_to_json(const std::vector<int>& path) {
  Json j = Json::array({"root"});
  for (int a : path) j.push_back(a);
  return j;
}

std::vector<int> path_from_json(const Json& j) {
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) {
    if (i == 0 && j[i].is_string()) continue;  // leading "root" marker
    out.push_back(j[i].get<int>());
  }
  return out;
}

RaySpec ray_from_json(const Json& j) {
  RaySpec r;
  if (j.contains("prefix")) {
    for (const auto& a : j.at("prefix")) r.prefix.push_back(a.get<int>());
  }
  for (const auto& a : j.at("period")) r.period.push_back(a.get<int>());
  return r;
}

Json ray_to_json(const RaySpec& r) {
  return Json{{"prefix", r.prefix}, {"period", r.period}};
}

// --- results ------------------------------------------------------------------

Json cut_to_json(const MultiGraph& g, const Cut& c) {
  return Json{{"edges", edge_names(g, c.edges)},
              {"sideA", vertex_names(g, c.side_a)},
              {"sideB", vertex_names(g, c.side_b)}};
}

Cut cut_from_json(const MultiGraph& g, const Json& j) {
  Cut c;
  c.edges = edges_from_names(g, j.at("edges"));
  c.side_a = vertices_from_names(g, j.at("sideA"));
  c.side_b = vertices_from_names(g, j.at("sideB"));
  return c;
}

Json cut_certificate_to_json(const MultiGraph& g, const CutCertificate& cert) {
  Json paths = Json::array();
  for (const Path& p : cert.paths) paths.push_back(path_json(g, p));
  return Json{{"schema", "edgecut/cut-certificate/v1"},
              {"value", cert.value},
              {"cut", cut_to_json(g, cert.cut)},
              {"disjointPaths", paths}};
}

Json gomory_hu_to_json(const GomoryHuTree& t) {
  Json edges = Json::array();
  for (size_t i = 0; i < t.edges.size(); ++i) {
    edges.push_back(Json{{"a", t.graph->vertex_name(t.edges[i][0])},
                         {"b", t.graph->vertex_name(t.edges[i][1])},
                         {"weight", t.weights[i]},
                         {"cut", cut_to_json(*t.graph, t.cuts[i])}});
  }
  return Json{{"schema", "edgecut/gomory-hu/v1"}, {"treeEdges", edges}};
}

std::string gomory_hu_to_dot(const GomoryHuTree& t) {
  std::ostringstream out;
  out << "graph GH {\n";
  for (Vertex v = 0; v < t.graph->vertex_count(); ++v) {
    out << "  \"" << t.graph->vertex_name(v) << "\";\n";
  }
  for (size_t i = 0; i < t.edges.size(); ++i) {
    out << "  \"" << t.graph->vertex_name(t.edges[i][0]) << "\" -- \""
        << t.graph->vertex_name(t.edges[i][1]) << "\" [label=\"" << t.weights[i] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Json blocks_to_json(const MultiGraph& g, const BlockPartition& p) {
  Json blocks = Json::array();
  for (const auto& blk : p.blocks) blocks.push_back(vertex_names(g, blk));
  return Json{{"schema", "edgecut/blocks/v1"}, {"k", p.k}, {"blocks", blocks}};
}

BlockPartition blocks_from_json(const MultiGraph& g, const Json& j) {
  BlockPartition p;
  p.k = j.at("k").get<int>();
  for (const auto& blk : j.at("blocks")) p.blocks.push_back(vertices_from_names(g, blk));
  return p;
}

Json decomposition_to_json(const KBlockDecomposition& d, int k) {
  const MultiGraph& g = *d.decomposition.base;
  Json nodes = Json::array();
  for (int t = 0; t < d.decomposition.node_count; ++t) {
    nodes.push_back(Json{{"id", d.decomposition.node_name(t)},
                         {"part", vertex_names(g, d.decomposition.parts[t])}});
  }
  Json edges = Json::array();
  for (size_t i = 0; i < d.decomposition.tree_edges.size(); ++i) {
    edges.push_back(Json{{"a", d.decomposition.node_name(d.decomposition.tree_edges[i].first)},
                         {"b", d.decomposition.node_name(d.decomposition.tree_edges[i].second)},
                         {"adhesion", edge_names(g, d.adhesion.adhesion[i])},
                         {"size", d.adhesion.adhesion[i].size()}});
  }
  // Whether this particular decomposition happens to satisfy the other
  // backend's guarantee as well; reported for experimentation, never
  // asserted anywhere.
  bool adjacency = true;
  std::vector<int> owner(g.vertex_count(), -1);
  for (int t = 0; t < d.decomposition.node_count; ++t) {
    for (Vertex v : d.decomposition.parts[t]) owner[v] = t;
  }
  for (const auto& [a, b] : d.decomposition.tree_edges) {
    bool witnessed = false;
    for (EdgeIdx e = 0; e < g.edge_count() && !witnessed; ++e) {
      auto [u, v] = g.endpoints(e);
      witnessed = (owner[u] == a && owner[v] == b) || (owner[u] == b && owner[v] == a);
    }
    adjacency = adjacency && witnessed;
  }
  Json j{{"schema", "edgecut/treecut/v1"},
         {"k", k},
         {"backend", d.backend == DecompositionBackend::Paper ? "paper" : "gomoryhu"},
         {"nodes", nodes},
         {"treeEdges", edges},
         {"maxAdhesion", d.adhesion.max_adhesion},
         {"adhesionBelowK", d.adhesion.max_adhesion < k},
         {"adjacencyProperty", adjacency}};
  if (d.certificate && d.quotient) {
    j["certificate"] = spanning_certificate_to_json(*d.quotient, *d.certificate);
    j["quotient"] = graph_to_json(*d.quotient);
    j["quotient"].erase("schema");
  }
  return j;
}

KBlockDecomposition decomposition_from_json(const MultiGraph& g, const Json& j) {
  KBlockDecomposition d;
  d.backend = j.at("backend").get<std::string>() == "paper" ? DecompositionBackend::Paper
                                                            : DecompositionBackend::GomoryHu;
  d.decomposition.base = &g;
  std::map<std::string, int> node_index;
  for (const auto& n : j.at("nodes")) {
    node_index[n.at("id").get<std::string>()] = d.decomposition.node_count;
    d.decomposition.parts.push_back(vertices_from_names(g, n.at("part")));
    ++d.decomposition.node_count;
  }
  for (const auto& e : j.at("treeEdges")) {
    d.decomposition.tree_edges.emplace_back(node_index.at(e.at("a").get<std::string>()),
                                            node_index.at(e.at("b").get<std::string>()));
    d.adhesion.adhesion.push_back(edges_from_names(g, e.at("adhesion")));
    d.adhesion.max_adhesion =
        std::max(d.adhesion.max_adhesion, static_cast<int>(d.adhesion.adhesion.back().size()));
  }
  return d;
}

std::string decomposition_to_dot(const KBlockDecomposition& d) {
  const MultiGraph& g = *d.decomposition.base;
  std::ostringstream out;
  out << "graph treecut {\n  compound=true;\n";
  for (int t = 0; t < d.decomposition.node_count; ++t) {
    out << "  subgraph cluster_" << t << " {\n    label=\"" << d.decomposition.node_name(t)
        << "\";\n";
    for (Vertex v : d.decomposition.parts[t]) {
      out << "    \"" << g.vertex_name(v) << "\";\n";
    }
    out << "  }\n";
  }
  for (size_t i = 0; i < d.decomposition.tree_edges.size(); ++i) {
    auto [a, b] = d.decomposition.tree_edges[i];
    out << "  \"" << g.vertex_name(d.decomposition.parts[a].front()) << "\" -- \""
        << g.vertex_name(d.decomposition.parts[b].front()) << "\" [ltail=cluster_" << a
        << ", lhead=cluster_" << b << ", label=\"" << d.adhesion.adhesion[i].size() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Json spanning_certificate_to_json(const MultiGraph& g, const SpanningTreeCertificate& cert) {
  Json steps = Json::array();
  for (const SpanningStep& s : cert.steps) {
    steps.push_back(Json{{"edge", g.edge_name(s.chosen_edge)},
                         {"bond", cut_to_json(g, s.bond)},
                         {"excludedAfter", edge_names(g, s.excluded_after)}});
  }
  return Json{{"schema", "edgecut/finseptree/v1"},
              {"root", g.vertex_name(cert.root)},
              {"treeEdges", edge_names(g, cert.tree_edges)},
              {"steps", steps},
              {"finalExcluded", edge_names(g, cert.final_excluded)}};
}

SpanningTreeCertificate spanning_certificate_from_json(const MultiGraph& g, const Json& j) {
  SpanningTreeCertificate cert;
  cert.root = g.vertex(j.at("root").get<std::string>());
  cert.tree_edges = edges_from_names(g, j.at("treeEdges"));
  for (const auto& s : j.at("steps")) {
    SpanningStep step;
    step.chosen_edge = g.edge(s.at("edge").get<std::string>());
    step.bond = cut_from_json(g, s.at("bond"));
    step.excluded_after = edges_from_names(g, s.at("excludedAfter"));
    cert.steps.push_back(std::move(step));
  }
  cert.final_excluded = edges_from_names(g, j.at("finalExcluded"));
  return cert;
}

Json subdivision_to_json(const MultiGraph& g, const Subdivision& s) {
  Json spokes = Json::array();
  for (const auto& row : s.spokes) {
    Json r = Json::array();
    for (const Path& p : row) r.push_back(path_json(g, p));
    spokes.push_back(r);
  }
  return Json{{"k", s.k},
              {"m", s.m},
              {"hubs", vertex_names(g, s.hubs)},
              {"centers", vertex_names(g, s.centers)},
              {"spokes", spokes}};
}

Subdivision subdivision_from_json(const MultiGraph& g, const Json& j) {
  Subdivision s;
  s.k = j.at("k").get<int>();
  s.m = j.at("m").get<int>();
  s.hubs = vertices_from_names(g, j.at("hubs"));
  s.centers = vertices_from_names(g, j.at("centers"));
  for (const auto& row : j.at("spokes")) {
    std::vector<Path> r;
    for (const auto& p : row) r.push_back(path_from_json_obj(g, p));
    s.spokes.push_back(std::move(r));
  }
  return s;
}

Json subdivision_search_to_json(const MultiGraph& g, const SubdivisionSearch& s) {
  Json j{{"schema", "edgecut/halin/v1"}, {"rounds", s.rounds}, {"found", s.found.has_value()}};
  if (s.found) {
    j["subdivision"] = subdivision_to_json(g, *s.found);
  } else {
    j["caveat"] = "none-found is not a proof of absence (greedy packing)";
  }
  return j;
}

std::string subdivision_to_dot(const MultiGraph& g, const Subdivision& s) {
  std::set<EdgeIdx> spoke_edges;
  for (const auto& row : s.spokes) {
    for (const Path& p : row) spoke_edges.insert(p.edges.begin(), p.edges.end());
  }
  std::set<Vertex> hubs(s.hubs.begin(), s.hubs.end());
  std::set<Vertex> centers(s.centers.begin(), s.centers.end());
  std::ostringstream out;
  out << "graph subdivision {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << g.vertex_name(v) << "\"";
    if (hubs.count(v)) {
      out << " [shape=doublecircle]";
    } else if (centers.count(v)) {
      out << " [shape=box]";
    }
    out << ";\n";
  }
  for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    out << "  \"" << g.vertex_name(u) << "\" -- \"" << g.vertex_name(v) << "\"";
    if (spoke_edges.count(e)) out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json verdict_to_json(const MetrizabilityVerdict& v) {
  Json j{{"schema", "edgecut/endspace-check/v1"}, {"metrizable", v.metrizable}};
  if (v.witness) {
    j["witness"] = path_to_json(v.witness->node_path);
    j["witnessBulkIndex"] = v.witness->bulk_index;
  }
  return j;
}

Json end_distance_to_json(const EndDistance& d) {
  Json j{{"schema", "edgecut/end-distance/v1"}, {"exponent", d.exponent}, {"value", d.value()}};
  if (d.indistinguishable) j["indistinguishableAtDepth"] = d.exponent;
  return j;
}

Json homeo_report_to_json(const HomeoReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json f = Json::array();
    for (const auto& edge : e.f_edges) f.push_back(path_to_json(edge));
    Json entry{{"kind", e.kind},
               {"tprimeNode", path_to_json(e.tprime_node)},
               {"edgeSet", f},
               {"ok", e.ok}};
    if (!e.note.empty()) entry["note"] = e.note;
    entries.push_back(entry);
  }
  return Json{{"schema", "edgecut/homeo-witness/v1"},
              {"depth", r.depth},
              {"witness", r.witness},
              {"failures", r.failures},
              {"entries", entries}};
}

Json error_to_json(const Error& e) {
  return Json{{"error", Json{{"code", e.code()}, {"message", e.what()}}}};
}

}  // namespace edgecut
