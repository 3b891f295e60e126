#include "acymatch/cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "acymatch/bounds.hpp"
#include "acymatch/gen.hpp"
#include "acymatch/io.hpp"
#include "acymatch/oracle.hpp"

namespace acym {

namespace {

using json = nlohmann::ordered_json;

json edges_json(const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

json verify_json(const std::string& kind, const VerifyResult& vr) {
  json j;
  j["ok"] = vr.ok;
  j["kind"] = kind;
  j["reason"] = vr.reason;
  j["witness_vertices"] = vr.witness_vertices;
  j["witness_edges"] = edges_json(vr.witness_edges);
  return j;
}

std::string sig6(double x) {  // reporting only, never parsed back
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) fail(errc::io_error, "cannot open " + path + " for writing");
  f << text;
}

int cmd_solve(const std::string& in, const std::string& out_path, const std::string& report_path,
              bool trace, std::ostream& out, std::ostream& err) {
  Graph g = read_edge_list(in);
  SolveReport rep = solve(g);
  if (rep.isolated_dropped > 0)
    err << "warning: dropped " << rep.isolated_dropped << " isolated vertices\n";

  // Trust-but-verify: re-check the certificate through the public verifiers.
  bool certified = rep.bound_ok && rep.n0 >= 0;
  if (rep.n0 > 0) certified = certified && meets_thm1(rep.matching.size(), rep.n0, rep.delta);
  if (auto vr = is_acyclic_matching(g, rep.matching); !vr)
    fail(errc::invariant_violation, "self-check failed: " + vr.reason);
  if (rep.delta >= 3) {
    if (auto vr = is_corona_forest(g, rep.matching); !vr)
      fail(errc::invariant_violation, "self-check failed: " + vr.reason);
  }

  json j = solve_report_json(rep, trace);
  out << j.dump(2) << "\n";
  if (!out_path.empty()) write_text_file(out_path, to_matching_text(rep.matching));
  if (!report_path.empty()) write_text_file(report_path, j.dump(2) + "\n");
  return certified ? 0 : 2;
}

int cmd_exact(const std::string& in, const std::string& kind_name, int k, int cap,
              std::ostream& out) {
  Graph g = read_edge_list(in);
  MatchKind kind = match_kind_from_name(kind_name);
  OracleResult res = exact_max(g, kind, k, cap);
  json j;
  j["optimum"] = res.optimum;
  j["witness"] = edges_json(res.witness.edges);
  j["nodes"] = res.nodes_explored;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& matching_path,
               const std::string& kind, int k, std::ostream& out) {
  Graph g = read_edge_list(graph_path);
  Matching m = read_matching(matching_path);
  VerifyResult vr;
  if (kind == "plain")
    vr = is_matching(g, m);
  else if (kind == "acyclic")
    vr = is_acyclic_matching(g, m);
  else if (kind == "induced")
    vr = is_induced_matching(g, m);
  else if (kind == "degenerate") {
    if (k < 0) fail(errc::missing_k, "--k is required for kind=degenerate");
    vr = is_k_degenerate_matching(g, m, k);
  } else if (kind == "corona")
    vr = is_corona_forest(g, m);
  else
    fail(errc::bad_parameter, "unknown kind: " + kind);
  out << verify_json(kind, vr).dump(2) << "\n";
  return vr.ok ? 0 : 1;
}

int cmd_gen(const std::string& family, int n, int delta, long long m, int copies, int a, int b,
            uint64_t seed, const std::string& out_path, std::ostream& out) {
  Graph g;
  std::string spec;
  if (family == "joos") {
    g = gen_joos(delta, copies);
    spec = "family=joos delta=" + std::to_string(delta) + " copies=" + std::to_string(copies);
  } else if (family == "random_capped") {
    g = gen_random_capped(n, delta, m, seed);
    spec = "family=random_capped n=" + std::to_string(n) + " delta=" + std::to_string(delta) +
           " m=" + std::to_string(m) + " seed=" + std::to_string(seed) + " prng=" + kPrngId;
  } else if (family == "path") {
    g = gen_path(n);
    spec = "family=path n=" + std::to_string(n);
  } else if (family == "cycle") {
    g = gen_cycle(n);
    spec = "family=cycle n=" + std::to_string(n);
  } else if (family == "complete") {
    g = gen_complete(n);
    spec = "family=complete n=" + std::to_string(n);
  } else if (family == "complete_bipartite") {
    g = gen_complete_bipartite(a, b);
    spec = "family=complete_bipartite a=" + std::to_string(a) + " b=" + std::to_string(b);
  } else if (family == "random_tree") {
    g = gen_random_tree(n, seed);
    spec = "family=random_tree n=" + std::to_string(n) + " seed=" + std::to_string(seed) +
           " prng=" + kPrngId;
  } else {
    fail(errc::bad_parameter, "unknown family: " + family);
  }

  if (out_path.empty()) fail(errc::bad_parameter, "--out is required");
  save_edge_list(out_path, g, {"acymatch gen " + spec});
  json j;
  j["family"] = family;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["out"] = out_path;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_bounds(long long n, long long m, long long delta, std::optional<long long> k,
               std::ostream& out) {
  json j;
  j["thm1"] = thm1_bound(n, delta);
  j["joos"] = joos_bound(n, delta);
  j["edge_lb"] = edge_lower_bound(m, delta);
  if (delta >= 2 && m >= 1)
    j["regular_ub"] = regular_upper_bound(m, delta);
  else
    j["regular_ub"] = nullptr;
  if (k && *k >= 1)
    j["kdeg_conjecture"] = kdeg_conjecture_bound(n, delta, *k);
  else
    j["kdeg_conjecture"] = nullptr;
  if (k && *k >= 2) {
    Rational c = kdeg_adapted_coefficient(static_cast<int>(*k));
    j["kdeg_coefficient"] = {{"num", c.num}, {"den", c.den}, {"value", c.value()}};
  } else {
    j["kdeg_coefficient"] = nullptr;
  }
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_baseline(const std::string& in, const std::string& out_path,
                 const std::string& report_path, std::ostream& out) {
  Graph g = read_edge_list(in);
  Matching m = greedy_acyclic(g);
  if (auto vr = is_acyclic_matching(g, m); !vr)
    fail(errc::invariant_violation, "baseline output rejected: " + vr.reason);
  json j;
  j["n0"] = g.vertex_count();
  j["m0"] = g.edge_count();
  j["delta"] = g.max_degree();
  j["size"] = m.size();
  j["matching"] = edges_json(m.edges);
  j["stages"] = json::array();
  out << j.dump(2) << "\n";
  if (!out_path.empty()) write_text_file(out_path, to_matching_text(m));
  if (!report_path.empty()) write_text_file(report_path, j.dump(2) + "\n");
  return 0;
}

int cmd_bench(const std::string& dir, const std::string& csv_path, bool oracle, int oracle_cap,
              std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  if (!fs::is_directory(dir)) fail(errc::io_error, "not a directory: " + dir);
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".el")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "no instances\n";
    return 1;
  }

  std::ostringstream csv;
  csv << "instance,n,m,delta,size,bound,bound_ok,optimum,ratio_bound,ratio_opt,millis\n";
  bool all_ok = true;
  double min_ratio = 0.0, sum_ratio = 0.0;
  long long ratio_rows = 0;
  for (const std::string& f : files) {
    Graph g = read_edge_list(f);
    auto t0 = std::chrono::steady_clock::now();
    SolveReport rep = solve(g);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    double bound = rep.n0 > 0 ? thm1_bound(rep.n0, rep.delta) : 0.0;
    all_ok = all_ok && rep.bound_ok;

    std::string opt_s, ratio_opt_s;
    if (oracle && rep.n0 <= oracle_cap) {
      OracleResult res = exact_max(g, MatchKind::acyclic, -1, oracle_cap);
      opt_s = std::to_string(res.optimum);
      if (res.optimum > 0)
        ratio_opt_s = sig6(static_cast<double>(rep.matching.size()) / res.optimum);
    }
    std::string ratio_s;
    if (bound > 0.0) {
      double r = static_cast<double>(rep.matching.size()) / bound;
      ratio_s = sig6(r);
      min_ratio = ratio_rows == 0 ? r : std::min(min_ratio, r);
      sum_ratio += r;
      ++ratio_rows;
    }
    csv << fs::path(f).filename().string() << "," << rep.n0 << "," << rep.m0 << "," << rep.delta
        << "," << rep.matching.size() << "," << sig6(bound) << "," << (rep.bound_ok ? 1 : 0)
        << "," << opt_s << "," << ratio_s << "," << ratio_opt_s << "," << sig6(ms) << "\n";
  }

  std::string summary = "instances=" + std::to_string(files.size()) +
                        " bound_ok=" + (all_ok ? std::string("all") : std::string("NOT-ALL")) +
                        " min_ratio_bound=" + (ratio_rows ? sig6(min_ratio) : "n/a") +
                        " mean_ratio_bound=" + (ratio_rows ? sig6(sum_ratio / ratio_rows) : "n/a");
  if (csv_path.empty()) {
    out << csv.str();
    err << summary << "\n";
  } else {
    write_text_file(csv_path, csv.str());
    out << summary << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

json solve_report_json(const SolveReport& rep, bool with_partitions) {
  json j;
  j["n0"] = rep.n0;
  j["m0"] = rep.m0;
  j["delta"] = rep.delta;
  j["size"] = rep.matching.size();
  j["bound_ok"] = rep.bound_ok;
  j["isolated_dropped"] = rep.isolated_dropped;
  j["matching"] = edges_json(rep.matching.edges);
  json stages = json::array();
  for (const StageOutcome& s : rep.stages) {
    json js;
    js["rule"] = stage_rule_name(s.rule);
    js["m_edges"] = edges_json(s.stage_matching.edges);
    js["removed"] = s.removed_count;
    js["vm"] = s.vm;
    js["nm"] = s.nm;
    js["im"] = s.im;
    js["budget_ok"] = s.budget_ok;
    if (with_partitions && s.partition) {
      const StagePartition& p = *s.partition;
      json jp;
      jp["x"] = p.x;
      jp["y"] = p.y;
      jp["z"] = p.z;
      jp["i1"] = p.i1;
      jp["i2"] = p.i2;
      jp["i3"] = p.i3;
      jp["i4"] = p.i4;
      jp["x1"] = p.x1;
      jp["x2"] = p.x2;
      jp["x3"] = p.x3;
      jp["checks"] = {{"e1", p.checks.e1},
                      {"e2", p.checks.e2},
                      {"e3", p.checks.e3},
                      {"claim4", p.checks.claim4},
                      {"i3_final", p.checks.i3_final}};
      js["partition"] = std::move(jp);
    }
    stages.push_back(std::move(js));
  }
  j["stages"] = std::move(stages);
  return j;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"acyclic matchings in bounded-degree graphs: certified solver, exact oracles, "
               "verifiers, bounds, generators, benchmarks"};
  app.require_subcommand(1);

  // solve
  std::string s_in, s_out, s_report;
  bool s_trace = false;
  auto* solve_cmd = app.add_subcommand("solve", "certified acyclic matching of an edge list");
  solve_cmd->add_option("--in", s_in, "input edge-list file")->required();
  solve_cmd->add_option("--out", s_out, "write the matching here");
  solve_cmd->add_option("--report", s_report, "write the JSON report here");
  solve_cmd->add_flag("--trace", s_trace, "include stage partitions in the report");

  // exact
  std::string e_in, e_kind = "acyclic";
  int e_k = -1, e_cap = 20;
  auto* exact_cmd = app.add_subcommand("exact", "exhaustive optimum on a small instance");
  exact_cmd->add_option("--in", e_in, "input edge-list file")->required();
  exact_cmd->add_option("--kind", e_kind, "plain|acyclic|induced|degenerate");
  exact_cmd->add_option("--k", e_k, "degeneracy bound (kind=degenerate)");
  exact_cmd->add_option("--cap", e_cap, "vertex-count cap");

  // verify
  std::string v_graph, v_matching, v_kind = "acyclic";
  int v_k = -1;
  auto* verify_cmd = app.add_subcommand("verify", "check a matching certificate");
  verify_cmd->add_option("--graph", v_graph, "edge-list file")->required();
  verify_cmd->add_option("--matching", v_matching, "matching file")->required();
  verify_cmd->add_option("--kind", v_kind, "plain|acyclic|induced|degenerate|corona");
  verify_cmd->add_option("--k", v_k, "degeneracy bound (kind=degenerate)");

  // gen
  std::string g_family, g_out;
  int g_n = 0, g_delta = 0, g_copies = 1, g_a = 1, g_b = 1;
  long long g_m = 0;
  uint64_t g_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance");
  gen_cmd->add_option("--family", g_family,
                      "joos|random_capped|path|cycle|complete|complete_bipartite|random_tree")
      ->required();
  gen_cmd->add_option("--n", g_n, "vertex count");
  gen_cmd->add_option("--delta", g_delta, "degree cap");
  gen_cmd->add_option("--m", g_m, "edge target (random_capped)");
  gen_cmd->add_option("--copies", g_copies, "copies (joos)");
  gen_cmd->add_option("--a", g_a, "left part size (complete_bipartite)");
  gen_cmd->add_option("--b", g_b, "right part size (complete_bipartite)");
  gen_cmd->add_option("--seed", g_seed, "PRNG seed");
  gen_cmd->add_option("--out", g_out, "output edge-list file")->required();

  // bounds
  long long b_n = 0, b_m = 0, b_delta = 1, b_k = -1;
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds as JSON");
  bounds_cmd->add_option("--n", b_n, "vertex count")->required();
  bounds_cmd->add_option("--m", b_m, "edge count");
  bounds_cmd->add_option("--delta", b_delta, "max degree")->required();
  bounds_cmd->add_option("--k", b_k, "degeneracy parameter");

  // bench
  std::string be_dir, be_csv;
  bool be_oracle = false;
  int be_cap = 14;
  auto* bench_cmd = app.add_subcommand(
      "bench",
      "solve a directory of .el instances into CSV rows "
      "(instance,n,m,delta,size,bound,bound_ok,optimum,ratio_bound,ratio_opt,millis; "
      "floats use 6 significant digits)");
  bench_cmd->add_option("--dir", be_dir, "instance directory")->required();
  bench_cmd->add_option("--csv", be_csv, "write rows here (default stdout)");
  bench_cmd->add_flag("--oracle", be_oracle, "compare against the exact optimum when n <= cap");
  bench_cmd->add_option("--oracle-cap", be_cap, "oracle vertex cap");

  // baseline
  std::string bl_in, bl_out, bl_report;
  auto* base_cmd = app.add_subcommand("baseline", "greedy acyclic matching, no guarantee");
  base_cmd->add_option("--in", bl_in, "input edge-list file")->required();
  base_cmd->add_option("--out", bl_out, "write the matching here");
  base_cmd->add_option("--report", bl_report, "write the JSON report here");

  std::vector<const char*> argv;
  argv.push_back("acymatch");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*solve_cmd) return cmd_solve(s_in, s_out, s_report, s_trace, out, err);
    if (*exact_cmd) return cmd_exact(e_in, e_kind, e_k, e_cap, out);
    if (*verify_cmd) return cmd_verify(v_graph, v_matching, v_kind, v_k, out);
    if (*gen_cmd) return cmd_gen(g_family, g_n, g_delta, g_m, g_copies, g_a, g_b, g_seed, g_out, out);
    if (*bounds_cmd)
      return cmd_bounds(b_n, b_m, b_delta,
                        b_k >= 0 ? std::optional<long long>(b_k) : std::nullopt, out);
    if (*bench_cmd) return cmd_bench(be_dir, be_csv, be_oracle, be_cap, out, err);
    if (*base_cmd) return cmd_baseline(bl_in, bl_out, bl_report, out);
    err << "no subcommand\n";
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    json j;
    j["error"] = errc_name(e.code());
    j["message"] = e.what();
    err << j.dump() << "\n";
    return e.internal() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace acym
