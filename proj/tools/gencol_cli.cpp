// gencol: generalised colouring numbers, orders, covers and reductions.
//
// Vertices are 0-based everywhere, including files. Subdivision uses exactly
// s internal vertices per edge. Randomness comes from mt19937_64 seeded by
// --seed with rejection-sampled draws, so runs reproduce bit-for-bit.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gencol/cover.hpp"
#include "gencol/errors.hpp"
#include "gencol/exact.hpp"
#include "gencol/experiments.hpp"
#include "gencol/extremal.hpp"
#include "gencol/graph.hpp"
#include "gencol/hardness.hpp"
#include "gencol/heuristics.hpp"
#include "gencol/io.hpp"
#include "gencol/reach.hpp"
#include "gencol/rng.hpp"
#include "gencol/tgrad.hpp"
#include "gencol/treedec.hpp"

using json = nlohmann::json;
using namespace gencol;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::string json_path;
  std::string csv_path;
  bool quiet = false;
};

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string graph_hash(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  std::ostringstream hex;
  hex << std::hex << fnv1a(out.str());
  return hex.str();
}

// Assembles the fixed report schema; values/bounds/params filled per command.
struct Report {
  json body;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Report(const std::string& command, const GlobalOpts& opts) {
    body["command"] = command;
    body["input_hash"] = "";
    body["params"] = json::object();
    body["values"] = json::object();
    body["bounds"] = json::object();
    body["witness_files"] = json::array();
    body["seed"] = opts.seed;
  }

  void finish(const GlobalOpts& opts) {
    body["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start)
            .count();
    if (!opts.json_path.empty()) {
      std::ofstream out(opts.json_path);
      if (!out) throw InputError("cannot write JSON report: " + opts.json_path);
      out << body.dump(2) << "\n";
    }
  }
};

void write_csv(const GlobalOpts& opts, const std::string& header,
               const std::vector<std::string>& rows) {
  if (opts.csv_path.empty()) return;
  std::ofstream out(opts.csv_path);
  if (!out) throw InputError("cannot write CSV report: " + opts.csv_path);
  out << header << "\n";
  for (const auto& row : rows) out << row << "\n";
}

void say(const GlobalOpts& opts, const std::string& line) {
  if (!opts.quiet) std::cout << line << "\n";
}

LinearOrder heuristic_order(const Graph& g, const std::string& name, int r) {
  if (name == "degeneracy") return degeneracy_order(g);
  if (name == "greedy-adm") return greedy_adm_order(g, std::max(1, r)).order;
  if (name == "identity") return LinearOrder::identity(g.vertex_count());
  throw InputError("unknown heuristic '" + name + "' (degeneracy, greedy-adm, identity)");
}

std::string save_order(const LinearOrder& order, const std::string& path) {
  std::ostringstream out;
  write_order(order, out);
  save_to_file(path, out.str());
  return path;
}

int run(int argc, char** argv) {
  CLI::App app{"generalised colouring numbers toolkit"};
  app.require_subcommand(1);
  GlobalOpts opts;
  app.add_option("--seed", opts.seed, "PRNG seed (mt19937_64)");
  app.add_option("--budget", opts.budget, "search node budget for exact solvers");
  app.add_option("--json", opts.json_path, "write a JSON report here");
  app.add_option("--csv", opts.csv_path, "write per-sample CSV rows here");
  app.add_flag("--quiet", opts.quiet, "suppress normal output");

  // ---- compute ----
  auto* compute = app.add_subcommand("compute", "evaluate or certify a colouring number");
  std::string compute_kind, compute_graph, compute_order, compute_heuristic, compute_witness;
  int compute_r = 1;
  bool compute_exact = false;
  compute->add_option("kind", compute_kind, "wcol | col | adm")->required();
  compute->add_option("--graph", compute_graph, "edge-list file")->required();
  compute->add_option("-r", compute_r, "radius")->required();
  compute->add_flag("--exact", compute_exact, "certified optimum over all orders");
  compute->add_option("--order", compute_order, "evaluate this order file (upper bound)");
  compute->add_option("--heuristic", compute_heuristic,
                      "degeneracy | greedy-adm | identity (upper bound)");
  compute->add_option("--witness", compute_witness, "write the witness/used order here");

  // ---- order ----
  auto* order_cmd = app.add_subcommand("order", "emit an order file");
  std::string order_graph, order_heuristic, order_out;
  int order_r = 1;
  bool order_random = false;
  order_cmd->add_option("--graph", order_graph)->required();
  order_cmd->add_option("--heuristic", order_heuristic, "degeneracy | greedy-adm | identity");
  order_cmd->add_flag("--random", order_random, "uniform random order from --seed");
  order_cmd->add_option("-r", order_r, "radius for greedy-adm");
  order_cmd->add_option("--out", order_out)->required();

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "graph generators");
  gen->require_subcommand(1);
  auto* gen_gkr_cmd = gen->add_subcommand("gkr", "extremal family with its decomposition");
  int gkr_k = 1, gkr_r = 1;
  long long gkr_cap = kDefaultGkrVertexCap;
  std::string gkr_out, gkr_td_out;
  gen_gkr_cmd->add_option("-k", gkr_k)->required();
  gen_gkr_cmd->add_option("-r", gkr_r)->required();
  gen_gkr_cmd->add_option("--cap", gkr_cap, "vertex-count cap");
  gen_gkr_cmd->add_option("--out", gkr_out)->required();
  gen_gkr_cmd->add_option("--out-td", gkr_td_out, "write the decomposition here");

  auto* gen_named = gen->add_subcommand("named", "embedded cages and parametric families");
  std::string named_name, named_out;
  gen_named->add_option("name", named_name,
                        "petersen|heawood|mcgee|robertson|tutte_coxeter|levi_pg23|"
                        "clique(n)|cycle(n)|path(n)|star(n)|complete_bipartite(a,b)")
      ->required();
  gen_named->add_option("--out", named_out)->required();

  auto* gen_sub = gen->add_subcommand("subdivide", "exactly s internal vertices per edge");
  std::string sub_graph, sub_out;
  int sub_s = 1;
  gen_sub->add_option("--graph", sub_graph)->required();
  gen_sub->add_option("-s", sub_s)->required();
  gen_sub->add_option("--out", sub_out)->required();

  auto* gen_comp = gen->add_subcommand("complement", "complement on the same vertex set");
  std::string comp_graph, comp_out;
  gen_comp->add_option("--graph", comp_graph)->required();
  gen_comp->add_option("--out", comp_out)->required();

  // ---- td ----
  auto* td_cmd = app.add_subcommand("td", "tree decompositions");
  td_cmd->require_subcommand(1);
  auto* td_validate = td_cmd->add_subcommand("validate", "check the three conditions");
  std::string tdv_graph, tdv_td;
  int tdv_spot = 0;
  td_validate->add_option("--graph", tdv_graph)->required();
  td_validate->add_option("--td", tdv_td)->required();
  td_validate->add_option("--spot-checks", tdv_spot, "random separator probes");

  auto* td_smooth = td_cmd->add_subcommand("smooth", "contract and interpolate");
  std::string tds_graph, tds_td, tds_out;
  td_smooth->add_option("--graph", tds_graph)->required();
  td_smooth->add_option("--td", tds_td)->required();
  td_smooth->add_option("--out", tds_out)->required();

  auto* td_order_cmd = td_cmd->add_subcommand("order", "order from a smooth decomposition");
  std::string tdo_graph, tdo_td, tdo_out;
  int tdo_r = 0;
  td_order_cmd->add_option("--graph", tdo_graph)->required();
  td_order_cmd->add_option("--td", tdo_td)->required();
  td_order_cmd->add_option("--out", tdo_out)->required();
  td_order_cmd->add_option("-r", tdo_r, "also certify the binomial bound at this radius");

  // ---- cover ----
  auto* cover_cmd = app.add_subcommand("cover", "sparse neighbourhood covers");
  cover_cmd->require_subcommand(1);
  auto* cover_build = cover_cmd->add_subcommand("build", "cover from a weak-reach order");
  std::string cb_graph, cb_order, cb_heuristic, cb_out;
  int cb_r = 1;
  cover_build->add_option("--graph", cb_graph)->required();
  cover_build->add_option("-r", cb_r)->required();
  cover_build->add_option("--order", cb_order, "order file");
  cover_build->add_option("--heuristic", cb_heuristic, "degeneracy | greedy-adm | identity");
  cover_build->add_option("--out", cb_out)->required();

  auto* cover_check = cover_cmd->add_subcommand("check", "validate a cover file");
  std::string cc_graph, cc_cover;
  int cc_r = 1;
  cover_check->add_option("--graph", cc_graph)->required();
  cover_check->add_option("--cover", cc_cover)->required();
  cover_check->add_option("-r", cc_r)->required();

  auto* cover_project = cover_cmd->add_subcommand("project", "restrict to the host's vertices");
  std::string cp_host, cp_graph, cp_cover, cp_out;
  int cp_s = 1, cp_r = 1;
  cover_project->add_option("--host", cp_host, "original graph h")->required();
  cover_project->add_option("--graph", cp_graph, "its exact s-subdivision")->required();
  cover_project->add_option("-s", cp_s)->required();
  cover_project->add_option("--cover", cp_cover)->required();
  cover_project->add_option("-r", cp_r, "radius parameter of the input cover")->required();
  cover_project->add_option("--out", cp_out)->required();

  // ---- reduce ----
  auto* reduce = app.add_subcommand("reduce", "hardness reductions");
  reduce->require_subcommand(1);
  auto* bcbs = reduce->add_subcommand("bcbs", "balanced biclique to weak 3-colouring");
  std::string bcbs_graph, bcbs_out, bcbs_sidecar;
  int bcbs_k = 1;
  bool bcbs_verify = false;
  bcbs->add_option("--graph", bcbs_graph, "bipartite edge-list file")->required();
  bcbs->add_option("-k", bcbs_k)->required();
  bcbs->add_option("--out", bcbs_out, "reduced edge-list file")->required();
  bcbs->add_option("--sidecar", bcbs_sidecar, "JSON sidecar {n, k, threshold}")->required();
  bcbs->add_flag("--verify", bcbs_verify, "run both sides exactly (small n only)");

  // ---- tgrad ----
  auto* tgrad_cmd = app.add_subcommand("tgrad", "topological greatest reduced average density");
  std::string tg_graph;
  int tg_r = 0;
  tgrad_cmd->add_option("--graph", tg_graph)->required();
  tgrad_cmd->add_option("-r", tg_r, "rank")->required();

  // ---- exp ----
  auto* exp = app.add_subcommand("exp", "experiment drivers");
  exp->require_subcommand(1);
  auto* exp_girth = exp->add_subcommand("girth-lb", "regular-girth weak-reach lower bound");
  std::string eg_graph;
  int eg_r = 1, eg_samples = 100;
  exp_girth->add_option("--graph", eg_graph)->required();
  exp_girth->add_option("-r", eg_r)->required();
  exp_girth->add_option("--samples", eg_samples);

  auto* exp_cauchy = exp->add_subcommand("cauchy", "strong-reach layer inequality");
  std::string ec_graph;
  int ec_r = 1, ec_samples = 100;
  exp_cauchy->add_option("--graph", ec_graph)->required();
  exp_cauchy->add_option("-r", ec_r)->required();
  exp_cauchy->add_option("--samples", ec_samples);

  auto* exp_adm = exp->add_subcommand("adm-bound", "admissibility vs expansion");
  std::string ea_graph;
  int ea_r = 1;
  exp_adm->add_option("--graph", ea_graph)->required();
  exp_adm->add_option("-r", ea_r)->required();

  CLI11_PARSE(app, argc, argv);
  ExactBudget budget{opts.budget};

  if (*compute) {
    Report report("compute-" + compute_kind, opts);
    Graph g = load_graph_file(compute_graph);
    report.body["input_hash"] = graph_hash(g);
    report.body["params"] = {{"r", compute_r}, {"kind", compute_kind}};
    if (compute_kind != "wcol" && compute_kind != "col" && compute_kind != "adm")
      throw InputError("kind must be wcol|col|adm");
    int modes = int(compute_exact) + int(!compute_order.empty()) + int(!compute_heuristic.empty());
    if (modes != 1) throw InputError("choose exactly one of --exact, --order, --heuristic");
    int value = 0;
    LinearOrder used;
    bool certified = compute_exact;
    if (compute_exact) {
      ExactResult res = compute_kind == "wcol" ? wcol_exact(g, compute_r, budget)
                        : compute_kind == "col" ? col_exact(g, compute_r, budget)
                                                : adm_exact(g, compute_r, budget);
      value = res.value;
      used = res.witness;
      report.body["values"]["nodes"] = res.nodes;
    } else {
      used = !compute_order.empty() ? load_order_file(compute_order, g.vertex_count())
                                    : heuristic_order(g, compute_heuristic, compute_r);
      value = compute_kind == "wcol" ? eval_wcol(g, used, compute_r)
              : compute_kind == "col" ? eval_col(g, used, compute_r)
                                      : eval_adm(g, used, compute_r);
    }
    report.body["values"]["value"] = value;
    report.body["values"]["exact"] = certified;
    report.body["values"]["label"] = certified ? "certified" : "upper bound";
    if (!compute_witness.empty())
      report.body["witness_files"].push_back(save_order(used, compute_witness));
    say(opts, compute_kind + "_" + std::to_string(compute_r) + " = " + std::to_string(value) +
                  (certified ? " (certified)" : " (upper bound)") +
                  (compute_witness.empty() ? "" : ", order -> " + compute_witness));
    report.finish(opts);
    return 0;
  }

  if (*order_cmd) {
    Report report("order", opts);
    Graph g = load_graph_file(order_graph);
    report.body["input_hash"] = graph_hash(g);
    if (order_random == !order_heuristic.empty())
      throw InputError("choose exactly one of --random, --heuristic");
    LinearOrder order;
    if (order_random) {
      Rng rng(opts.seed);
      order = rng.random_order(g.vertex_count());
    } else {
      order = heuristic_order(g, order_heuristic, order_r);
    }
    report.body["witness_files"].push_back(save_order(order, order_out));
    say(opts, "order -> " + order_out);
    report.finish(opts);
    return 0;
  }

  if (*gen_gkr_cmd) {
    Report report("gen-gkr", opts);
    auto inst = gen_gkr(gkr_k, gkr_r, gkr_cap);
    report.body["input_hash"] = graph_hash(inst.graph);
    report.body["params"] = {{"k", gkr_k}, {"r", gkr_r}};
    report.body["values"] = {{"n", inst.graph.vertex_count()},
                             {"m", inst.graph.edge_count()},
                             {"c", inst.c}};
    std::ostringstream out;
    write_edge_list(inst.graph, out);
    save_to_file(gkr_out, out.str());
    report.body["witness_files"].push_back(gkr_out);
    if (!gkr_td_out.empty()) {
      std::ostringstream td_out;
      write_td(inst.td, inst.graph.vertex_count(), td_out);
      save_to_file(gkr_td_out, td_out.str());
      report.body["witness_files"].push_back(gkr_td_out);
    }
    say(opts, "G(" + std::to_string(gkr_k) + "," + std::to_string(gkr_r) + "): " +
                  std::to_string(inst.graph.vertex_count()) + " vertices -> " + gkr_out);
    report.finish(opts);
    return 0;
  }

  if (*gen_named) {
    Report report("gen-named", opts);
    Graph g = named_graph(named_name);
    report.body["input_hash"] = graph_hash(g);
    report.body["values"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
    int gg = girth(g);
    report.body["values"]["girth"] = gg == kGirthInfinite ? json("infinity") : json(gg);
    std::ostringstream out;
    write_edge_list(g, out);
    save_to_file(named_out, out.str());
    report.body["witness_files"].push_back(named_out);
    say(opts, named_name + ": n=" + std::to_string(g.vertex_count()) + " -> " + named_out);
    report.finish(opts);
    return 0;
  }

  if (*gen_sub) {
    Report report("gen-subdivide", opts);
    Graph g = load_graph_file(sub_graph);
    report.body["input_hash"] = graph_hash(g);
    Graph out_graph = subdivide(g, sub_s);
    std::ostringstream out;
    write_edge_list(out_graph, out);
    save_to_file(sub_out, out.str());
    report.body["params"]["s"] = sub_s;
    report.body["values"] = {{"n", out_graph.vertex_count()}, {"m", out_graph.edge_count()}};
    report.body["witness_files"].push_back(sub_out);
    say(opts, "subdivision -> " + sub_out);
    report.finish(opts);
    return 0;
  }

  if (*gen_comp) {
    Report report("gen-complement", opts);
    Graph g = load_graph_file(comp_graph);
    report.body["input_hash"] = graph_hash(g);
    Graph out_graph = complement(g);
    std::ostringstream out;
    write_edge_list(out_graph, out);
    save_to_file(comp_out, out.str());
    report.body["values"] = {{"n", out_graph.vertex_count()}, {"m", out_graph.edge_count()}};
    report.body["witness_files"].push_back(comp_out);
    say(opts, "complement -> " + comp_out);
    report.finish(opts);
    return 0;
  }

  if (*td_validate) {
    Report report("td-validate", opts);
    Graph g = load_graph_file(tdv_graph);
    report.body["input_hash"] = graph_hash(g);
    auto td = load_td_file(tdv_td);
    auto v = validate_td(g, td, tdv_spot, opts.seed);
    report.body["values"] = {{"valid", v.valid},
                             {"width", v.width},
                             {"smooth", v.smooth},
                             {"violation", v.violation}};
    say(opts, v.valid ? "valid, width " + std::to_string(v.width) +
                            (v.smooth ? ", smooth" : ", not smooth")
                      : "INVALID: " + v.violation);
    report.finish(opts);
    return v.valid ? 0 : 3;
  }

  if (*td_smooth) {
    Report report("td-smooth", opts);
    Graph g = load_graph_file(tds_graph);
    report.body["input_hash"] = graph_hash(g);
    auto td = load_td_file(tds_td);
    auto smooth = make_smooth(g, td);
    std::ostringstream out;
    write_td(smooth, g.vertex_count(), out);
    save_to_file(tds_out, out.str());
    report.body["values"] = {{"bags", smooth.node_count()}, {"width", smooth.width()}};
    report.body["witness_files"].push_back(tds_out);
    say(opts, "smooth decomposition -> " + tds_out);
    report.finish(opts);
    return 0;
  }

  if (*td_order_cmd) {
    Report report("td-order", opts);
    Graph g = load_graph_file(tdo_graph);
    report.body["input_hash"] = graph_hash(g);
    auto td = load_td_file(tdo_td);
    auto order = td_order(g, td);
    report.body["witness_files"].push_back(save_order(order, tdo_out));
    if (tdo_r > 0) {
      auto cert = binomial_certificate(g, td, tdo_r);
      report.body["values"] = {{"wcol_value", cert.value}};
      report.body["bounds"] = {{"binomial", cert.bound}, {"width", cert.width}};
      say(opts, "order -> " + tdo_out + "; eval_wcol_" + std::to_string(tdo_r) + " = " +
                    std::to_string(cert.value) + " <= C(r+k,k) = " + std::to_string(cert.bound));
    } else {
      say(opts, "order -> " + tdo_out);
    }
    report.finish(opts);
    return 0;
  }

  if (*cover_build) {
    Report report("cover-build", opts);
    Graph g = load_graph_file(cb_graph);
    report.body["input_hash"] = graph_hash(g);
    if (cb_order.empty() == cb_heuristic.empty())
      throw InputError("choose exactly one of --order, --heuristic");
    LinearOrder order = !cb_order.empty() ? load_order_file(cb_order, g.vertex_count())
                                          : heuristic_order(g, cb_heuristic, 2 * cb_r);
    Cover cover = build_cover(g, order, cb_r);
    auto check = validate_cover(g, cover, cb_r);
    std::ostringstream out;
    write_cover(cover, out);
    save_to_file(cb_out, out.str());
    report.body["params"]["r"] = cb_r;
    report.body["values"] = {{"clusters", cover.clusters.size()},
                             {"is_cover", check.is_cover},
                             {"max_radius", check.max_radius},
                             {"max_degree", check.max_degree}};
    report.body["bounds"]["radius"] = 2 * cb_r;
    report.body["bounds"]["degree"] = eval_wcol(g, order, 2 * cb_r);
    report.body["witness_files"].push_back(cb_out);
    say(opts, "cover -> " + cb_out + " (radius " + std::to_string(check.max_radius) +
                  ", degree " + std::to_string(check.max_degree) + ")");
    report.finish(opts);
    return check.is_cover ? 0 : 3;
  }

  if (*cover_check) {
    Report report("cover-check", opts);
    Graph g = load_graph_file(cc_graph);
    report.body["input_hash"] = graph_hash(g);
    Cover cover = load_cover_file(cc_cover, cc_r);
    auto check = validate_cover(g, cover, cc_r);
    report.body["params"]["r"] = cc_r;
    report.body["values"] = {{"is_cover", check.is_cover},
                             {"max_radius", check.max_radius},
                             {"max_degree", check.max_degree},
                             {"violation", check.violation}};
    say(opts, check.is_cover ? "valid " + std::to_string(cc_r) + "-cover, radius " +
                                   std::to_string(check.max_radius) + ", degree " +
                                   std::to_string(check.max_degree)
                             : "NOT a cover: " + check.violation);
    report.finish(opts);
    return check.is_cover ? 0 : 3;
  }

  if (*cover_project) {
    Report report("cover-project", opts);
    Graph host = load_graph_file(cp_host);
    Graph sub_g = load_graph_file(cp_graph);
    report.body["input_hash"] = graph_hash(sub_g);
    Cover cover = load_cover_file(cp_cover, cp_r);
    Cover projected = project_cover(sub_g, host, cp_s, cover);
    auto check = validate_cover(host, projected, projected.r);
    std::ostringstream out;
    write_cover(projected, out);
    save_to_file(cp_out, out.str());
    report.body["params"] = {{"s", cp_s}, {"r", cp_r}};
    report.body["values"] = {{"clusters", projected.clusters.size()},
                             {"projected_r", projected.r},
                             {"is_cover", check.is_cover},
                             {"max_radius", check.max_radius},
                             {"max_degree", check.max_degree}};
    report.body["witness_files"].push_back(cp_out);
    say(opts, "projected cover -> " + cp_out + " (r " + std::to_string(projected.r) +
                  ", degree " + std::to_string(check.max_degree) + ")");
    report.finish(opts);
    return check.is_cover ? 0 : 3;
  }

  if (*bcbs) {
    Report report("reduce-bcbs", opts);
    Graph raw = load_graph_file(bcbs_graph);
    report.body["input_hash"] = graph_hash(raw);
    auto bg = BipartiteGraph::from_graph(raw);
    auto reduced = bcbs_to_wcol(bg, bcbs_k);
    std::ostringstream out;
    write_edge_list(reduced.graph, out);
    save_to_file(bcbs_out, out.str());
    json sidecar = {{"n", reduced.graph.vertex_count()},
                    {"k", bcbs_k},
                    {"threshold", reduced.threshold}};
    save_to_file(bcbs_sidecar, sidecar.dump(2) + "\n");
    report.body["params"]["k"] = bcbs_k;
    report.body["values"] = {{"n", reduced.graph.vertex_count()},
                             {"threshold", reduced.threshold}};
    report.body["witness_files"] = {bcbs_out, bcbs_sidecar};
    bool ok = true;
    if (bcbs_verify) {
      auto rep = verify_reduction(bg, bcbs_k, budget);
      ok = rep.equivalence_holds && rep.radius_stable;
      report.body["values"]["biclique"] = rep.biclique;
      report.body["values"]["wcol3"] = rep.wcol3;
      report.body["values"]["wcol4"] = rep.wcol4;
      report.body["values"]["equivalence_holds"] = rep.equivalence_holds;
      report.body["values"]["radius_stable"] = rep.radius_stable;
      say(opts, std::string("verification ") + (ok ? "passed" : "FAILED"));
    }
    say(opts, "reduced instance -> " + bcbs_out + " (threshold " +
                  std::to_string(reduced.threshold) + ")");
    report.finish(opts);
    return ok ? 0 : 3;
  }

  if (*tgrad_cmd) {
    Report report("tgrad", opts);
    Graph g = load_graph_file(tg_graph);
    report.body["input_hash"] = graph_hash(g);
    Rational grad = top_grad_bruteforce(g, tg_r, budget);
    report.body["params"]["r"] = tg_r;
    report.body["values"]["grad"] = grad.str();
    say(opts, "tgrad_" + std::to_string(tg_r) + " = " + grad.str());
    report.finish(opts);
    return 0;
  }

  if (*exp_girth) {
    Report report("exp-girth-lb", opts);
    Graph g = load_graph_file(eg_graph);
    report.body["input_hash"] = graph_hash(g);
    auto rep = girth_lb_experiment(g, eg_r, eg_samples, opts.seed);
    report.body["params"] = {{"r", eg_r}, {"samples", eg_samples}};
    report.body["values"] = {{"min_W", rep.min_observed.str()}, {"all_pass", rep.all_pass}};
    report.body["bounds"]["W"] = rep.bound.str();
    std::vector<std::string> rows;
    for (const auto& row : rep.rows) {
      std::ostringstream line;
      line << row.kind << "," << row.index << "," << row.statistic.str() << ","
           << (row.pass ? 1 : 0);
      rows.push_back(line.str());
    }
    write_csv(opts, "kind,index,W,pass", rows);
    say(opts, "bound " + rep.bound.str() + ", min observed " + rep.min_observed.str() +
                  (rep.all_pass ? " (all orders pass)" : " (VIOLATION)"));
    report.finish(opts);
    return rep.all_pass ? 0 : 3;
  }

  if (*exp_cauchy) {
    Report report("exp-cauchy", opts);
    Graph g = load_graph_file(ec_graph);
    report.body["input_hash"] = graph_hash(g);
    auto rep = cauchy_experiment(g, ec_r, ec_samples, opts.seed);
    report.body["params"] = {{"r", ec_r}, {"samples", ec_samples}};
    report.body["values"] = {{"min_slack", rep.min_slack.str()}, {"all_pass", rep.all_pass}};
    std::vector<std::string> rows;
    for (const auto& row : rep.rows) {
      std::ostringstream line;
      line << row.kind << "," << row.index << "," << row.statistic.str() << ","
           << (row.pass ? 1 : 0);
      rows.push_back(line.str());
    }
    write_csv(opts, "kind,index,slack,pass", rows);
    say(opts,
        "min slack " + rep.min_slack.str() + (rep.all_pass ? " (all orders pass)" : " (VIOLATION)"));
    report.finish(opts);
    return rep.all_pass ? 0 : 3;
  }

  if (*exp_adm) {
    Report report("exp-adm-bound", opts);
    Graph g = load_graph_file(ea_graph);
    report.body["input_hash"] = graph_hash(g);
    auto rep = check_adm_bound(g, ea_r, budget);
    report.body["params"]["r"] = ea_r;
    report.body["values"] = {{"adm", rep.adm},
                             {"grad", rep.grad.str()},
                             {"holds", rep.holds},
                             {"literal_holds", rep.literal_holds},
                             {"slack", rep.slack.str()}};
    report.body["bounds"] = {{"bound", rep.bound.str()},
                             {"literal_bound", rep.literal_bound.str()}};
    say(opts, "adm = " + std::to_string(rep.adm) + " <= " + rep.bound.str() +
                  (rep.holds ? " (holds)" : " (VIOLATION)"));
    report.finish(opts);
    return rep.holds ? 0 : 3;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << " (bounds [" << e.lower_bound << ", "
              << e.upper_bound << "])\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
