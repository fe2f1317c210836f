#include "bench_suite.hpp"

#include <chrono>
#include <exception>

#include "algorithms.hpp"
#include "ecdp/color_coding.hpp"
#include "ecdp/disjoint_paths.hpp"
#include "ecdp/ecg_io.hpp"
#include "ecdp/generators.hpp"
#include "ecdp/oracle.hpp"
#include "ecdp/parallel.hpp"
#include "ecdp/tree_solver.hpp"
#include "ecdp/xp_solver.hpp"

namespace ecdp::cli {

std::vector<CorpusEntry> default_corpus(const std::string& data_dir, int seeds) {
  std::vector<std::pair<std::string, ProblemInstance>> base;
  for (const char* f : {"fig2", "fig3-reduced", "k4-reduced"}) {
    base.emplace_back(f, load_instance(data_dir + "/" + f + ".ecg"));
  }
  for (int i = 0; i < seeds; ++i) {
    const auto seed = static_cast<std::uint64_t>(i);
    base.emplace_back("random-" + std::to_string(i), gen_random_instance(8 + i % 4, 3, 0.4, 2, seed));
  }
  std::vector<CorpusEntry> out;
  for (auto& [name, inst] : base) {
    for (Mode m : {Mode::Cdp, Mode::Cddp}) {
      auto copy = inst;
      copy.mode = m;
      out.push_back({name, std::move(copy)});
    }
  }
  return out;
}

namespace {

enum class Check { Exact, PerColor, Approx };

int used_colors(const ProblemInstance& inst) {
  std::vector<char> used(static_cast<std::size_t>(inst.graph.color_count()), 0);
  for (const Edge& e : inst.graph.edges()) {
    for (ColorId c : e.colors) used[c] = 1;
  }
  int n = 0;
  for (char u : used) n += u;
  return n;
}

// Reason to skip, or empty when the algorithm applies with an exactness claim.
std::string applicability(const std::string& algo, const ProblemInstance& inst) {
  const bool cdp = inst.mode == Mode::Cdp;
  if (algo == "flow") return cdp && inst.graph.color_count() == 1 ? "" : "needs one color, cdp";
  if (algo == "tree") return target_removal_leaves_forest(inst) ? "" : "G minus t has a cycle";
  if (algo == "disjoint-paths") {
    const Vertex st[] = {inst.source, inst.target};
    return cdp && is_disjoint_paths(inst.graph, st) ? "" : "interior not disjoint paths or cddp";
  }
  if (algo == "xp") return cdp && find_deletion_set(inst, 2) ? "" : "distance > 2 or cddp";
  if (algo == "color-coding") {
    const auto lab = injective_labeling(inst);
    const int hc = cdp ? 0 : lab.h_c;
    return lab.h_v <= kMaxVertexLabels && hc <= kMaxColorLabels && lab.h_v + hc <= 14 ? "" : "labels too wide";
  }
  if (algo == "vc-fpt") return cdp ? "" : "cdp only";
  if (algo == "vc-approx") return cdp ? "cddp only" : "";
  return "";
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<CorpusEntry>& corpus) {
  std::vector<std::vector<BenchRow>> per(corpus.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& entry = corpus[i];
    const auto& inst = entry.instance;
    const std::string mode(to_string(inst.mode));
    long oracle = -1;
    try {
      oracle = static_cast<long>(solve_exact(inst, {kDefaultPathCap, Execution::Serial}).size());
    } catch (const OverflowError&) {
    }
    for (const auto& algo : algorithm_names()) {
      BenchRow row{entry.name, mode, algo, "ok", -1, oracle, 0, ""};
      if (const auto why = applicability(algo, inst); !why.empty()) {
        row.status = "skipped";
        row.note = why;
        per[i].push_back(row);
        continue;
      }
      SolveParams p;
      p.algo = algo;
      p.exec = Execution::Serial;
      p.strategy = "injective";
      p.distance_max = 2;
      if (algo == "color-coding") p.max_len = inst.graph.vertex_count() - 1;
      try {
        const auto t0 = std::chrono::steady_clock::now();
        const auto out = run_algorithm(inst, p);
        row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        row.value = static_cast<long>(out.solution.size());
        if (const auto rep = validate_solution(inst, out.solution); !rep) {
          row.status = "discrepancy";
          row.note = "invalid witness: " + rep.summary();
        } else if (oracle >= 0) {
          const Check check = algo == "per-color" ? Check::PerColor : algo == "vc-approx" ? Check::Approx : Check::Exact;
          bool ok = row.value <= oracle;
          if (check == Check::Exact) ok = row.value == oracle;
          if (check == Check::Approx) ok = ok && 2 * row.value >= oracle;
          if (check == Check::PerColor && inst.mode == Mode::Cdp) {
            const long q = std::max(used_colors(inst), 1);
            ok = ok && row.value * q >= oracle;
          }
          if (!ok) row.status = "discrepancy";
        } else {
          row.note = "oracle overflow";
        }
      } catch (const std::exception& e) {
        row.status = "error";
        row.note = e.what();
      }
      per[i].push_back(row);
    }
  }
  std::vector<BenchRow> rows;
  for (auto& r : per) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

nlohmann::json bench_report(const std::vector<BenchRow>& rows) {
  nlohmann::json list = nlohmann::json::array();
  std::size_t bad = 0;
  for (const auto& r : rows) {
    if (r.status == "discrepancy" || r.status == "error") ++bad;
    list.push_back({{"instance", r.instance},
                    {"mode", r.mode},
                    {"algorithm", r.algorithm},
                    {"status", r.status},
                    {"value", r.value},
                    {"oracle", r.oracle},
                    {"wall_ms", r.wall_ms},
                    {"note", r.note}});
  }
  return {{"format", "ecdp-bench"}, {"version", 1}, {"discrepancies", bad}, {"rows", std::move(list)}};
}

}  // namespace ecdp::cli
