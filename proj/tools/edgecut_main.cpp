// Command-line surface over the edgecut library: every subcommand is a thin
// wrapper around one library operation, reading graphs/trees from files and
// printing a versioned JSON payload on stdout (exit 0), a structured error
// JSON on domain failures (exit 1), or usage on bad grammar (exit 2).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "edgecut/io.hpp"

namespace {

using namespace edgecut;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("nofile", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MultiGraph load_graph(const std::string& path) { return graph_from_text(slurp(path)); }

SymbolicTree load_tree(const std::string& path) {
  return tree_from_json(Json::parse(slurp(path)));
}

std::vector<Vertex> vertex_list(const MultiGraph& g, const std::string& csv) {
  std::vector<Vertex> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(g.vertex(item));
  }
  if (out.empty()) throw Error("badformat", "empty vertex list: " + csv);
  return out;
}

void emit(const Json& payload, const std::string& summary) {
  std::cout << payload.dump(2) << "\n";
  if (!summary.empty()) std::cerr << summary << "\n";
}

struct Options {
  std::string graph_file, tree_file;
  std::string s, t, u, v, a_csv, b_csv, root;
  std::string backend = "gomoryhu";
  std::string format = "json";
  std::string ray_p, ray_q;
  int k = 2, m = 2, seed_size = 2, max_depth = 12;
  int depth = 3, witness = 3;
  int truncate_depth = -1;
  bool block_reduction = false;
  long long seed = 20240817;
};

int run(const std::string& command, const Options& opt) {
  if (command == "mincut") {
    MultiGraph g = load_graph(opt.graph_file);
    auto cert = min_edge_cut(g, g.vertex(opt.s), g.vertex(opt.t));
    emit(cut_certificate_to_json(g, cert), "min cut value " + std::to_string(cert.value));
    return 0;
  }
  if (command == "bond") {
    MultiGraph g = load_graph(opt.graph_file);
    Bond bond = finite_bond_separating(g, vertex_list(g, opt.a_csv), vertex_list(g, opt.b_csv));
    Json j = cut_to_json(g, bond);
    j["schema"] = "edgecut/bond/v1";
    emit(j, "bond of size " + std::to_string(bond.edges.size()));
    return 0;
  }
  if (command == "lambda") {
    MultiGraph g = load_graph(opt.graph_file);
    int value = local_edge_connectivity(g, g.vertex(opt.u), g.vertex(opt.v));
    emit(Json{{"schema", "edgecut/lambda/v1"}, {"lambda", value}},
         "lambda = " + std::to_string(value));
    return 0;
  }
  if (command == "gomory-hu") {
    MultiGraph g = load_graph(opt.graph_file);
    GomoryHuTree tree = gomory_hu(g);
    if (opt.format == "dot") {
      std::cout << gomory_hu_to_dot(tree);
    } else {
      emit(gomory_hu_to_json(tree),
           "gomory-hu tree with " + std::to_string(tree.edges.size()) + " edges");
    }
    return 0;
  }
  if (command == "blocks") {
    MultiGraph g = load_graph(opt.graph_file);
    BlockPartition p = k_edge_blocks(g, opt.k);
    emit(blocks_to_json(g, p),
         std::to_string(p.blocks.size()) + " blocks at k=" + std::to_string(opt.k));
    return 0;
  }
  if (command == "treecut") {
    MultiGraph g = load_graph(opt.graph_file);
    auto backend =
        opt.backend == "paper" ? DecompositionBackend::Paper : DecompositionBackend::GomoryHu;
    auto d = decompose_into_k_blocks(g, opt.k, backend);
    if (opt.format == "dot") {
      std::cout << decomposition_to_dot(d);
    } else {
      emit(decomposition_to_json(d, opt.k),
           "tree-cut decomposition into " + std::to_string(d.decomposition.node_count) +
               " parts, max adhesion " + std::to_string(d.adhesion.max_adhesion));
    }
    return 0;
  }
  if (command == "finseptree") {
    MultiGraph g = load_graph(opt.graph_file);
    Vertex root = opt.root.empty() ? 0 : g.vertex(opt.root);
    auto cert = finitely_separating_spanning_tree(g, root, opt.block_reduction);
    emit(spanning_certificate_to_json(g, cert),
         "spanning tree with " + std::to_string(cert.steps.size()) + " growth steps");
    return 0;
  }
  if (command == "halin") {
    MultiGraph g = load_graph(opt.graph_file);
    auto result = find_kkm_subdivision(g, opt.k, opt.m, opt.seed_size);
    if (opt.format == "dot" && result.found) {
      std::cout << subdivision_to_dot(g, *result.found);
    } else {
      emit(subdivision_search_to_json(g, result),
           result.found ? "found a K_{k,m} subdivision" : "none found (not a proof of absence)");
    }
    return 0;
  }
  if (command == "endspace-check") {
    SymbolicTree t = load_tree(opt.tree_file);
    auto verdict = is_first_countable(t, true);
    emit(verdict_to_json(verdict), verdict.metrizable ? "metrizable" : "non-metrizable");
    return 0;
  }
  if (command == "endspace-distance") {
    SymbolicTree t = load_tree(opt.tree_file);
    auto p = end_point(t, ray_from_json(Json::parse(opt.ray_p)));
    auto q = end_point(t, ray_from_json(Json::parse(opt.ray_q)));
    auto d = end_distance(t, p, q, opt.max_depth);
    emit(end_distance_to_json(d), "distance " + std::to_string(d.value()));
    return 0;
  }
  if (command == "construct-gx") {
    SymbolicTree t = load_tree(opt.tree_file);
    PresentedGraph pg = build_gx(t);
    if (opt.truncate_depth >= 0) {
      RealizedGx rg = realize_gx(pg, opt.truncate_depth, opt.witness);
      if (opt.format == "dot") {
        std::cout << graph_to_dot(rg.graph);
      } else {
        Json j = graph_to_json(rg.graph);
        j["schema"] = "edgecut/gx-truncation/v1";
        Json tree_edges = Json::array();
        for (EdgeIdx e : rg.tree_edges) tree_edges.push_back(rg.graph.edge_name(e));
        j["baseTreeEdges"] = tree_edges;
        emit(j, "realized G_X truncation");
      }
    } else {
      emit(presented_to_json(pg), "presented graph G_X");
    }
    return 0;
  }
  if (command == "construct-tprime") {
    SymbolicTree t = load_tree(opt.tree_file);
    SymbolicTree tp = build_tprime(t);
    emit(tree_to_json(tp), "constructed T'");
    return 0;
  }
  if (command == "verify-homeo") {
    SymbolicTree t = load_tree(opt.tree_file);
    auto report = check_homeomorphism_witness(t, build_tprime(t), opt.depth, opt.witness);
    emit(homeo_report_to_json(report), std::to_string(report.failures) + " failures across " +
                                           std::to_string(report.entries.size()) + " witnesses");
    return report.failures == 0 ? 0 : 1;
  }
  throw Error("badcommand", "unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge cuts, tree-cut decompositions, and symbolic end spaces"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("EDGECUT_SEED")) {
    opt.seed = std::atoll(env);
  }
  app.add_option("--seed", opt.seed, "seed for randomized runs (EDGECUT_SEED overrides default)");

  std::string command;
  auto graph_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("graph", opt.graph_file, "graph file (JSON or DIMACS)")->required();
    sub->callback([&command, name]() { command = name; });
    return sub;
  };

  CLI::App* mincut = graph_cmd("mincut", "minimum s-t edge cut with disjoint-path certificate");
  mincut->add_option("--s", opt.s)->required();
  mincut->add_option("--t", opt.t)->required();

  CLI::App* bond = graph_cmd("bond", "finite bond separating vertex set A from B");
  bond->add_option("--A", opt.a_csv, "comma-separated vertex ids")->required();
  bond->add_option("--B", opt.b_csv, "comma-separated vertex ids")->required();

  CLI::App* lambda = graph_cmd("lambda", "local edge connectivity");
  lambda->add_option("--u", opt.u)->required();
  lambda->add_option("--v", opt.v)->required();

  CLI::App* gh = graph_cmd("gomory-hu", "Gomory-Hu tree");
  gh->add_option("--format", opt.format)->check(CLI::IsMember({"json", "dot"}));

  CLI::App* blocks = graph_cmd("blocks", "k-edge blocks");
  blocks->add_option("--k", opt.k)->required();

  CLI::App* treecut = graph_cmd("treecut", "tree-cut decomposition into k-edge blocks");
  treecut->add_option("--k", opt.k)->required();
  treecut->add_option("--backend", opt.backend)->check(CLI::IsMember({"paper", "gomoryhu"}));
  treecut->add_option("--format", opt.format)->check(CLI::IsMember({"json", "dot"}));

  CLI::App* fst = graph_cmd("finseptree", "finitely separating spanning tree with certificate");
  fst->add_option("--root", opt.root);
  fst->add_flag("--block-reduction", opt.block_reduction,
                "run separately inside 2-connected blocks");

  CLI::App* halin = graph_cmd("halin", "external-star search for a K_{k,m} subdivision");
  halin->add_option("--k", opt.k)->required();
  halin->add_option("--m", opt.m)->required();
  halin->add_option("--seed-size", opt.seed_size);
  halin->add_option("--format", opt.format)->check(CLI::IsMember({"json", "dot"}));

  CLI::App* endspace = app.add_subcommand("endspace", "symbolic end-space operations");
  endspace->require_subcommand(1);
  CLI::App* check = endspace->add_subcommand("check", "first-countability / metrizability verdict");
  check->add_option("tree", opt.tree_file, "symbolic tree JSON file")->required();
  check->callback([&command]() { command = "endspace-check"; });
  CLI::App* dist = endspace->add_subcommand("distance", "ultrametric distance between two ends");
  dist->add_option("tree", opt.tree_file)->required();
  dist->add_option("--p", opt.ray_p, "ray JSON, e.g. {\"prefix\":[0],\"period\":[1]}")->required();
  dist->add_option("--q", opt.ray_q)->required();
  dist->add_option("--max-depth", opt.max_depth);
  dist->callback([&command]() { command = "endspace-distance"; });

  CLI::App* construct = app.add_subcommand("construct", "end-space metrization constructions");
  construct->require_subcommand(1);
  CLI::App* gx = construct->add_subcommand("gx", "the presented graph G_X");
  gx->add_option("tree", opt.tree_file)->required();
  gx->add_option("--truncate-depth", opt.truncate_depth, "emit a realized truncation instead");
  gx->add_option("--witness", opt.witness);
  gx->add_option("--format", opt.format)->check(CLI::IsMember({"json", "dot"}));
  gx->callback([&command]() { command = "construct-gx"; });
  CLI::App* tprime = construct->add_subcommand("tprime", "the uncontracted tree T'");
  tprime->add_option("tree", opt.tree_file)->required();
  tprime->callback([&command]() { command = "construct-tprime"; });

  CLI::App* verify = app.add_subcommand("verify", "truncation-level verification");
  verify->require_subcommand(1);
  CLI::App* homeo = verify->add_subcommand("homeo", "homeomorphism witness report for T vs T'");
  homeo->add_option("tree", opt.tree_file)->required();
  homeo->add_option("--depth", opt.depth);
  homeo->add_option("--witness", opt.witness);
  homeo->callback([&command]() { command = "verify-homeo"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run(command, opt);
  } catch (const edgecut::Error& e) {
    std::cout << error_to_json(e).dump(2) << "\n";
    std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
    return 1;
  } catch (const edgecut::Json::exception& e) {
    edgecut::Error err("badformat", e.what());
    std::cout << error_to_json(err).dump(2) << "\n";
    std::cerr << "error (badformat): " << e.what() << "\n";
    return 1;
  }
}
