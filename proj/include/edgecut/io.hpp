#pragma once

#include <string>

#include "json.hpp"

#include "edgecut/constructions.hpp"
#include "edgecut/edge_blocks.hpp"
#include "edgecut/end_space.hpp"
#include "edgecut/fin_sep_tree.hpp"
#include "edgecut/graph.hpp"
#include "edgecut/halin.hpp"
#include "edgecut/mincut.hpp"
#include "edgecut/tree_cut.hpp"

namespace edgecut {

using Json = nlohmann::json;

// --- graphs ---------------------------------------------------------------
// JSON form: {"vertices":["a","b"],"edges":[["a","b"],["a","b"]]}
// DIMACS-like form: "p edge n m" header, "e u v" lines, 1-indexed, "c"
// comments. Both reject loops.
MultiGraph graph_from_json(const Json& j);
MultiGraph graph_from_dimacs(const std::string& text);
// Sniffs the format: leading '{' means JSON.
MultiGraph graph_from_text(const std::string& text);
Json graph_to_json(const MultiGraph& g);
std::string graph_to_dot(const MultiGraph& g);

// --- symbolic trees ---------------------------------------------------------
// Recursive node form: {"marked":bool, "children":[...],
//   "bulk": {"card":"finite:3"|"countable"|"uncountable","pattern":<node>}
//           or a list of such groups,
//   "ray": {"prefix":[<node>...], "period":[<node>...]}}.
SymbolicTree tree_from_json(const Json& j);
Json tree_to_json(const SymbolicTree& t);  // throws error(noserialize) on non-ray cycles

PresentedGraph presented_from_json(const Json& j);
Json presented_to_json(const PresentedGraph& pg);

// Node paths render as ["root", a1, a2, ...].
Json path_to_json(const std::vector<int>& path);
std::vector<int> path_from_json(const Json& j);

RaySpec ray_from_json(const Json& j);
Json ray_to_json(const RaySpec& r);

// --- results ---------------------------------------------------------------
Json cut_to_json(const MultiGraph& g, const Cut& c);
Cut cut_from_json(const MultiGraph& g, const Json& j);
Json cut_certificate_to_json(const MultiGraph& g, const CutCertificate& cert);
Json gomory_hu_to_json(const GomoryHuTree& t);
std::string gomory_hu_to_dot(const GomoryHuTree& t);
Json blocks_to_json(const MultiGraph& g, const BlockPartition& p);
BlockPartition blocks_from_json(const MultiGraph& g, const Json& j);
Json decomposition_to_json(const KBlockDecomposition& d, int k);
KBlockDecomposition decomposition_from_json(const MultiGraph& g, const Json& j);
std::string decomposition_to_dot(const KBlockDecomposition& d);
Json spanning_certificate_to_json(const MultiGraph& g, const SpanningTreeCertificate& cert);
SpanningTreeCertificate spanning_certificate_from_json(const MultiGraph& g, const Json& j);
Json subdivision_search_to_json(const MultiGraph& g, const SubdivisionSearch& s);
Json subdivision_to_json(const MultiGraph& g, const Subdivision& s);
Subdivision subdivision_from_json(const MultiGraph& g, const Json& j);
std::string subdivision_to_dot(const MultiGraph& g, const Subdivision& s);
Json verdict_to_json(const MetrizabilityVerdict& v);
Json end_distance_to_json(const EndDistance& d);
Json homeo_report_to_json(const HomeoReport& r);

// Structured error payload for the CLI.
Json error_to_json(const Error& e);

}  // namespace edgecut
