// ecdp: solve, verify, reduce, project, generate and benchmark
// edge-colored disjoint path instances.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "algorithms.hpp"
#include "bench_suite.hpp"
#include "ecdp/ecg_io.hpp"
#include "ecdp/generators.hpp"
#include "ecdp/reductions.hpp"
#include "ecdp/solution_io.hpp"
#include "ecdp/source_problems.hpp"
#include "ecdp/xp_solver.hpp"

using namespace ecdp;
using nlohmann::json;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitOverflow = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EcdpError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw EcdpError("cannot write " + path);
  out << text;
}

json certificate_json(const ReductionCertificate& c, const std::string& from) {
  return {{"format", "ecdp-certificate"},
          {"version", 1},
          {"from", from},
          {"source_digest", c.source_digest},
          {"vertex_names", c.vertex_names},
          {"color_names", c.color_names}};
}

struct Options {
  std::string instance;
  std::string mode = "cdp";
  std::string output;
  bool timing = false;
  cli::SolveParams solve;

  std::string solution_file;

  std::string from;
  std::string source_file;
  std::string certificate;

  std::string kind = "random";
  int n = 10;
  int q = 3;
  double p = 0.4;
  int colors_per_edge = 2;
  int extra = 0;
  int max_w = 3;
  double t_prob = 0.6;
  std::uint64_t seed = 1;

  std::string data_dir;
  int seeds = 20;
  bool count_st = false;
};

ProblemInstance load_with_mode(const Options& o) {
  auto inst = load_instance(o.instance);
  inst.mode = parse_mode(o.mode);
  if (o.solve.max_len) inst.length_bound = *o.solve.max_len;
  return inst;
}

int cmd_solve(const Options& o) {
  const auto inst = load_with_mode(o);
  const auto t0 = std::chrono::steady_clock::now();
  const auto out = cli::run_algorithm(inst, o.solve);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  RunRecord rec;
  rec.algorithm = o.solve.algo;
  rec.solution = out.solution;
  rec.instance_digest = instance_digest(inst);
  rec.stats = out.stats;
  if (o.timing) rec.stats["wall_ms"] = ms;
  rec.params = cli::params_json(o.solve);
  if (const auto rep = validate_solution(inst, rec.solution); !rep) {
    throw EcdpError("internal error: solver produced an invalid solution: " + rep.summary());
  }
  write_output(o.output, to_json(inst, rec).dump(2) + "\n");
  return 0;
}

int cmd_verify(const Options& o) {
  auto inst = load_instance(o.instance);
  const auto doc = json::parse(read_file(o.solution_file));
  if (doc.contains("mode") && doc["mode"].is_string()) {
    inst.mode = parse_mode(doc["mode"].get<std::string>());
  } else {
    inst.mode = parse_mode(o.mode);
  }
  if (doc.contains("params") && doc["params"].contains("max_len") && doc["params"]["max_len"].is_number_integer()) {
    inst.length_bound = doc["params"]["max_len"].get<int>();
  }
  if (o.solve.max_len) inst.length_bound = *o.solve.max_len;
  PathSolution sol;
  try {
    sol = solution_from_json(inst, doc);
  } catch (const ParseError& e) {
    std::cout << "INVALID " << e.what() << "\n";
    return kExitInvalid;
  }
  const auto rep = validate_solution(inst, sol);
  if (!rep) {
    std::cout << "INVALID\n";
    for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
    return kExitInvalid;
  }
  std::cout << "VALID " << sol.size() << " paths (" << to_string(sol.mode) << ")\n";
  return 0;
}

int cmd_reduce(const Options& o) {
  Reduction r;
  if (o.from == "isc") {
    r = reduce_isc_to_cddp(parse_cubic_graph(read_file(o.source_file)));
  } else if (o.from == "thresholdset") {
    r = reduce_ts_to_cdp(cover_uncovered_elements(parse_threshold_set(read_file(o.source_file))));
  } else {
    throw InvalidArgument("--from must be isc or thresholdset");
  }
  write_output(o.output, serialize_instance(r.instance));
  std::string cert = o.certificate;
  if (cert.empty() && !o.output.empty() && o.output != "-") cert = o.output + ".cert.json";
  if (!cert.empty()) write_output(cert, certificate_json(r.certificate, o.from).dump(2) + "\n");
  return 0;
}

int cmd_project(const Options& o) {
  const auto doc = json::parse(read_file(o.solution_file));
  std::vector<std::int32_t> set;
  if (o.from == "isc") {
    const auto g = parse_cubic_graph(read_file(o.source_file));
    const auto inst = reduce_isc_to_cddp(g).instance;
    set = project_paths_to_is(g, solution_from_json(inst, doc));
  } else if (o.from == "thresholdset") {
    const auto ts = cover_uncovered_elements(parse_threshold_set(read_file(o.source_file)));
    const auto inst = reduce_ts_to_cdp(ts).instance;
    set = project_paths_to_ts(ts, solution_from_json(inst, doc));
  } else {
    throw InvalidArgument("--from must be isc or thresholdset");
  }
  const json out{{"from", o.from}, {"size", set.size()}, {"set", set}};
  write_output(o.output, out.dump(2) + "\n");
  return 0;
}

int cmd_gen(const Options& o) {
  std::string text;
  if (o.kind == "cubic") {
    text = serialize_cubic_graph(gen_random_cubic(o.n, o.seed));
  } else if (o.kind == "random") {
    text = serialize_instance(gen_random_instance(o.n, o.q, o.p, o.colors_per_edge, o.seed));
  } else if (o.kind == "tree") {
    text = serialize_instance(gen_tree_instance(o.n, o.q, o.seed, o.t_prob));
  } else if (o.kind == "disjoint-paths") {
    text = serialize_instance(gen_disjoint_paths_instance(o.n, o.q, o.seed, o.extra));
  } else if (o.kind == "ts") {
    text = serialize_threshold_set(gen_random_ts(o.n, o.q, o.max_w, o.seed));
  } else {
    throw InvalidArgument("unknown --kind '" + o.kind + "'");
  }
  write_output(o.output, text);
  return 0;
}

int cmd_bench(const Options& o) {
  const auto corpus = cli::default_corpus(o.data_dir, o.seeds);
  const auto rows = cli::run_bench(corpus);
  const auto report = cli::bench_report(rows);
  std::size_t bad = 0;
  std::cerr << std::left << std::setw(16) << "instance" << std::setw(6) << "mode" << std::setw(16) << "algorithm"
            << std::setw(13) << "status" << std::setw(7) << "value" << std::setw(7) << "oracle" << "note\n";
  for (const auto& r : rows) {
    if (r.status == "discrepancy" || r.status == "error") ++bad;
    std::cerr << std::left << std::setw(16) << r.instance << std::setw(6) << r.mode << std::setw(16) << r.algorithm
              << std::setw(13) << r.status << std::setw(7) << r.value << std::setw(7) << r.oracle << r.note << "\n";
  }
  write_output(o.output, report.dump(2) + "\n");
  std::cerr << bad << " discrepancies\n";
  return bad == 0 ? 0 : kExitInvalid;
}

int cmd_distance(const Options& o) {
  const auto inst = load_with_mode(o);
  const auto x = find_deletion_set(inst, o.solve.distance_max);
  if (!x) {
    std::cerr << "error: no deletion set of size <= " << o.solve.distance_max << "\n";
    return kExitPrecondition;
  }
  const int d = static_cast<int>(x->vertices.size()) + (o.count_st ? 2 : 0);
  const json out{{"distance", d},
                 {"convention", o.count_st ? "s and t counted" : "s and t removed for free"},
                 {"deletion_set", x->vertices},
                 {"interior_paths", x->interior_paths}};
  write_output(o.output, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvers for disjoint uni-color s-t paths in edge-colored graphs"};
  app.require_subcommand(1);
  Options o;

  auto add_solve_flags = [&](CLI::App* c) {
    c->add_option("--max-len", o.solve.max_len, "length bound l (edges per path)")->check(CLI::PositiveNumber);
    c->add_option("--target", o.solve.target, "decision target k (color-coding)")->check(CLI::NonNegativeNumber);
    c->add_option("--trials", o.solve.trials, "labelings to try");
    c->add_option("--seed", o.solve.seed, "random seed");
    c->add_option("--strategy", o.solve.strategy, "auto|random|injective|witness")
        ->check(CLI::IsMember({"auto", "random", "injective", "witness"}));
    c->add_option("--distance-max", o.solve.distance_max, "deletion set size limit (xp)");
    c->add_option("--color", o.solve.color, "color for the flow solver");
  };

  auto* solve = app.add_subcommand("solve", "run one algorithm and print a run record");
  solve->add_option("--algo", o.solve.algo)->check(CLI::IsMember(cli::algorithm_names()));
  solve->add_option("--mode", o.mode)->check(CLI::IsMember({"cdp", "cddp"}));
  solve->add_option("-o,--output", o.output);
  solve->add_flag("--timing", o.timing, "add wall time to the stats");
  add_solve_flags(solve);
  solve->add_option("instance", o.instance)->required()->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "check a solution document against an instance");
  verify->add_option("--mode", o.mode, "mode when the document has none")->check(CLI::IsMember({"cdp", "cddp"}));
  verify->add_option("--max-len", o.solve.max_len);
  verify->add_option("instance", o.instance)->required()->check(CLI::ExistingFile);
  verify->add_option("solution", o.solution_file)->required()->check(CLI::ExistingFile);

  auto* reduce = app.add_subcommand("reduce", "build an instance from a source problem");
  reduce->add_option("--from", o.from)->required()->check(CLI::IsMember({"isc", "thresholdset"}));
  reduce->add_option("-o,--output", o.output);
  reduce->add_option("--certificate", o.certificate);
  reduce->add_option("input", o.source_file)->required()->check(CLI::ExistingFile);

  auto* project = app.add_subcommand("project", "map a reduced-instance solution back to the source problem");
  project->add_option("--from", o.from)->required()->check(CLI::IsMember({"isc", "thresholdset"}));
  project->add_option("-o,--output", o.output);
  project->add_option("input", o.source_file)->required()->check(CLI::ExistingFile);
  project->add_option("solution", o.solution_file)->required()->check(CLI::ExistingFile);

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--kind", o.kind)->check(CLI::IsMember({"cubic", "random", "tree", "disjoint-paths", "ts"}));
  gen->add_option("-n", o.n, "vertices (universe size for ts)");
  gen->add_option("-q", o.q, "colors (sets for ts)");
  gen->add_option("-p,--edge-prob", o.p);
  gen->add_option("--colors-per-edge", o.colors_per_edge);
  gen->add_option("--extra", o.extra, "hub vertices (disjoint-paths)");
  gen->add_option("--max-w", o.max_w);
  gen->add_option("--t-prob", o.t_prob);
  gen->add_option("--seed", o.seed);
  gen->add_option("-o,--output", o.output);

  auto* bench = app.add_subcommand("bench", "run every algorithm on the corpus against the oracle");
  bench->add_option("--data", o.data_dir)->required()->check(CLI::ExistingDirectory);
  bench->add_option("--seeds", o.seeds, "random instances in the corpus");
  bench->add_option("-o,--output", o.output, "report file (default stdout)");

  auto* distance = app.add_subcommand("distance", "distance to disjoint paths");
  distance->add_option("--distance-max", o.solve.distance_max);
  distance->add_flag("--count-st", o.count_st, "count s and t as deleted vertices");
  distance->add_option("-o,--output", o.output);
  distance->add_option("instance", o.instance)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(o);
    if (*verify) return cmd_verify(o);
    if (*reduce) return cmd_reduce(o);
    if (*project) return cmd_project(o);
    if (*gen) return cmd_gen(o);
    if (*bench) return cmd_bench(o);
    if (*distance) return cmd_distance(o);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
