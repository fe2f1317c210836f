// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "ecdp/color_coding.hpp"
#include "ecdp/disjoint_paths.hpp"
#include "ecdp/flow.hpp"
#include "ecdp/generators.hpp"
#include "ecdp/matching.hpp"
#include "ecdp/oracle.hpp"
#include "ecdp/reductions.hpp"
#include "ecdp/tree_solver.hpp"
#include "ecdp/vc_solvers.hpp"
#include "ecdp/xp_solver.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

using namespace ecdp;

namespace {

// Collects failures; a criterion passes when nothing was recorded.
struct Ledger {
  std::ostringstream why;
  int failures = 0;
  int checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ < 3) why << what << "; ";
  }
};

int exact(ProblemInstance inst, Mode mode, std::optional<int> l = std::nullopt) {
  inst.mode = mode;
  inst.length_bound = l;
  return static_cast<int>(solve_exact(inst).size());
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void diamond(Ledger& L) {
  const auto cddp = fixtures::diamond(Mode::Cddp);
  L.expect(exact(cddp, Mode::Cddp) == 2, "oracle cddp != 2");
  L.expect(exact(cddp, Mode::Cdp) == 2, "oracle cdp != 2");
  L.expect(greedy_length3(cddp, Mode::Cddp).size() == 1, "greedy cddp != 1");
  const auto a = approx_cddp_vc(cddp);
  L.expect(a.solution.size() == 1, "vc-approx != 1");
  L.expect(2 * a.solution.size() >= 2, "ratio violated");
  L.expect(validate_solution(cddp, a.solution).valid(), "vc-approx output invalid");
}

void threshold_example(Ledger& L) {
  const auto ts = fixtures::threshold_example();
  const auto r = reduce_ts_to_cdp(ts);
  const auto& g = r.instance.graph;
  // s=0; s0..s3 = 1..4; slots 5,6 | 7 | 8,9; t=10. Colors by element.
  const std::vector<std::tuple<int, int, std::vector<ColorId>>> edges{
      {0, 1, {0}},       {0, 2, {1}},       {0, 3, {2}},    {0, 4, {3}},    {1, 5, {0}},       {1, 6, {0}},
      {2, 5, {1}},       {2, 6, {1}},       {3, 5, {2}},    {3, 6, {2}},    {4, 7, {3}},       {5, 7, {0}},
      {5, 8, {1, 2}},    {5, 9, {1, 2}},    {6, 7, {0}},    {6, 8, {1, 2}}, {6, 9, {1, 2}},    {7, 8, {3}},
      {7, 9, {3}},       {7, 10, {0}},      {8, 10, {1, 2, 3}}, {9, 10, {1, 2, 3}}};
  L.expect(g.vertex_count() == 11, "vertex count != 11");
  L.expect(g.edge_count() == edges.size(), "edge count differs");
  for (const auto& [u, v, cs] : edges) {
    const auto* c = g.colors_between(u, v);
    L.expect(c && c->ids() == cs, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} differs");
  }
  const auto lifted = lift_ts_solution(ts, {0, 1});
  L.expect(validate_solution(r.instance, lifted).valid(), "lifted paths invalid");
  L.expect(lifted.size() == 2 && lifted.paths[0].vertices == std::vector<Vertex>{0, 1, 5, 7, 10} &&
               lifted.paths[1].vertices == std::vector<Vertex>{0, 2, 6, 9, 10},
           "lifted paths differ from the expected bold paths");
  L.expect(exact(r.instance, Mode::Cdp) == 2, "oracle on reduced != 2");
  L.expect(static_cast<int>(solve_thresholdset_bruteforce(ts).size()) == 2, "brute force != 2");
}

void cubic_reduction(Ledger& L) {
  const int sizes[] = {4, 6, 8, 10};
  for (int i = 0; i < 25; ++i) {
    const int n = sizes[i % 4];
    const auto g = gen_random_cubic(n, 1000 + static_cast<std::uint64_t>(i));
    const auto r = reduce_isc_to_cddp(g);
    const int edges = static_cast<int>(g.edges().size());
    const auto is = solve_is_bruteforce(g.as_simple());
    const int alpha = static_cast<int>(is.size());
    L.expect(alpha == reference::max_independent_set_scan(g.as_simple()), "IS brute force disagrees with scan");
    const auto best = solve_exact(r.instance);
    L.expect(static_cast<int>(best.size()) == edges + alpha, "oracle != |E| + alpha at i=" + std::to_string(i));
    const auto lifted = lift_is_to_paths(g, is);
    L.expect(validate_solution(r.instance, lifted).valid() && static_cast<int>(lifted.size()) == edges + alpha,
             "lift loses value");
    L.expect(project_paths_to_is(g, lifted).size() == is.size(), "project(lift) loses value");
    const auto back = project_paths_to_is(g, best);
    bool independent = true;
    for (auto u : back) {
      for (auto v : back) independent = independent && (u == v || !g.adjacent(u, v));
    }
    L.expect(independent && static_cast<int>(back.size()) == alpha, "project(oracle) not a maximum IS");
  }
}

void threshold_reduction(Ledger& L) {
  for (int i = 0; i < 25; ++i) {
    const auto seed = 2000 + static_cast<std::uint64_t>(i);
    const auto ts = cover_uncovered_elements(gen_random_ts(3 + i % 6, 1 + i % 5, 1 + i % 3, seed));
    const auto r = reduce_ts_to_cdp(ts);
    const int opt = static_cast<int>(solve_thresholdset_bruteforce(ts).size());
    L.expect(opt == reference::threshold_set_scan(ts), "TS brute force disagrees with scan");
    L.expect(exact(r.instance, Mode::Cdp) == opt, "oracle != TS optimum at i=" + std::to_string(i));
  }
}

void tree_solver(Ledger& L) {
  for (int i = 0; i < 50; ++i) {
    auto inst = gen_tree_instance(5 + i % 10, 1 + i % 6, 3000 + static_cast<std::uint64_t>(i));
    inst.mode = Mode::Cddp;
    const auto sol = solve_tree_cddp(inst);
    const int opt = exact(inst, Mode::Cddp);
    L.expect(validate_solution(inst, sol).valid(), "tree output invalid");
    L.expect(static_cast<int>(sol.size()) == opt, "tree != oracle at i=" + std::to_string(i));
    const auto m = maximum_bipartite_matching(build_tree_matching_graph(inst).graph);
    L.expect(m.size == static_cast<int>(sol.size()), "tree value != matching size");
  }
}

void disjoint_and_xp(Ledger& L) {
  for (int i = 0; i < 50; ++i) {
    const auto inst = gen_disjoint_paths_instance(5 + i % 10, 1 + i % 4, 4000 + static_cast<std::uint64_t>(i));
    const auto sol = solve_disjoint_paths_cdp(inst);
    L.expect(validate_solution(inst, sol).valid(), "disjoint-paths output invalid");
    L.expect(static_cast<int>(sol.size()) == exact(inst, Mode::Cdp), "disjoint-paths != oracle");
  }
  int found = 0;
  for (std::uint64_t seed = 5000; found < 30 && seed < 6000; ++seed) {
    const int extra = 1 + static_cast<int>(seed % 2);
    const auto inst = gen_disjoint_paths_instance(10 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 3),
                                                  seed, extra);
    const auto x = find_deletion_set(inst, 2);
    if (!x || x->vertices.empty()) continue;
    ++found;
    const auto sol = solve_xp_cdp(inst, *x);
    L.expect(validate_solution(inst, sol).valid(), "xp output invalid");
    L.expect(static_cast<int>(sol.size()) == exact(inst, Mode::Cdp), "xp != oracle at seed " + std::to_string(seed));
  }
  L.expect(found == 30, "fewer than 30 instances at distance 1-2");
}

void color_coding(Ledger& L) {
  // Soundness: random labelings, every accepted witness must validate.
  int trials = 0;
  for (std::uint64_t seed = 0; trials < 10000; ++seed) {
    auto inst = gen_random_instance(6 + static_cast<int>(seed % 6), 2 + static_cast<int>(seed % 3), 0.45, 2, seed);
    inst.mode = seed % 2 ? Mode::Cddp : Mode::Cdp;
    const int l = 2 + static_cast<int>(seed % 3);
    inst.length_bound = l;
    const int k = 1 + static_cast<int>(seed % 3);
    const auto budget = label_budget(inst, l, k);
    for (std::uint64_t t = 0; t < 100; ++t, ++trials) {
      const auto lab = random_labeling(inst, budget, seed, t);
      const ColorCodingTables tables(inst, lab, l, k, inst.mode);
      for (int z = 1; z <= k; ++z) {
        if (!tables.accepts(z)) continue;
        const auto w = tables.extract(z);
        L.expect(w && static_cast<int>(w->size()) == z && validate_solution(inst, *w).valid(),
                 "accepted witness invalid");
      }
    }
  }
  // Completeness: labels from a known solution make the DP accept, on the
  // full label set of that solution.
  int cases = 0;
  for (std::uint64_t seed = 100; cases < 60 && seed < 2000; ++seed) {
    auto inst = gen_random_instance(6 + static_cast<int>(seed % 7), 2 + static_cast<int>(seed % 4), 0.4, 2, seed);
    inst.mode = seed % 2 ? Mode::Cddp : Mode::Cdp;
    const int l = 2 + static_cast<int>(seed % 4);
    inst.length_bound = l;
    auto best = solve_exact(inst);
    if (best.size() == 0) continue;
    if (best.size() > 3) best.paths.resize(3);
    const int k = static_cast<int>(best.size());
    ++cases;
    const auto budget = label_budget(inst, l, k);
    const auto lab = witness_labeling(inst, best, budget);
    const ColorCodingTables tables(inst, lab, l, k, inst.mode);
    std::uint32_t vmask = 0;
    std::uint32_t cmask = 0;
    bool direct = false;
    for (const auto& p : best.paths) {
      if (p.length() == 1) direct = true;
      for (Vertex v : p.internal()) vmask |= 1U << lab.vertex_label[v];
      if (inst.mode == Mode::Cddp && p.length() > 1) cmask |= 1U << lab.color_label[p.color];
    }
    const int z = direct ? k - 1 : k;
    L.expect(tables.pi_entry(vmask, cmask, z), "Pi entry of the witness labels is 0");
    L.expect(tables.accepts(k), "DP rejects k under the witness labeling");
  }
  L.expect(cases == 60, "fewer than 60 completeness cases");
}

void vertex_cover_fpt(Ledger& L) {
  for (int i = 0; i < 50; ++i) {
    const auto inst = gen_random_instance(5 + i % 8, 1 + i % 4, 0.4, 2, 7000 + static_cast<std::uint64_t>(i));
    const auto r = solve_cdp_vc(inst);
    L.expect(validate_solution(inst, r.solution).valid(), "vc-fpt output invalid");
    L.expect(static_cast<int>(r.solution.size()) == exact(inst, Mode::Cdp), "vc-fpt != oracle");
    auto residual = r.decomposition.residual;
    residual.length_bound.reset();
    std::size_t longest = 0;
    for (const auto& p : enumerate_unicolor_paths(residual)) longest = std::max(longest, p.length());
    L.expect(static_cast<int>(longest) <= 2 * r.decomposition.k, "residual path longer than 2k");
  }
}

void approximation(Ledger& L) {
  for (int i = 0; i < 50; ++i) {
    auto inst = gen_random_instance(5 + i % 8, 2 + i % 4, 0.45, 2, 8000 + static_cast<std::uint64_t>(i));
    inst.mode = Mode::Cddp;
    const auto r = approx_cddp_vc(inst);
    const int opt = exact(inst, Mode::Cddp);
    const int v = static_cast<int>(r.solution.size());
    L.expect(validate_solution(inst, r.solution).valid(), "vc-approx output invalid");
    L.expect(ceil_div(opt, 2) <= v && v <= opt, "ratio bound violated at i=" + std::to_string(i));
  }
}

void structure(Ledger& L) {
  for (int i = 0; i < 100; ++i) {
    const auto inst = gen_random_instance(4 + i % 8, 1 + i % 4, 0.45, 2, 9000 + static_cast<std::uint64_t>(i));
    const int q = inst.graph.color_count();
    const int cdp = exact(inst, Mode::Cdp);
    const int cddp = exact(inst, Mode::Cddp);
    int flow_sum = 0;
    for (int f : per_color_flow_values(inst)) flow_sum += f;
    L.expect(cddp <= cdp && cdp <= flow_sum, "cddp <= cdp <= sum of flows fails");
    L.expect(cddp <= q, "cddp > q");
    auto as_cdp = inst;
    as_cdp.mode = Mode::Cdp;
    L.expect(static_cast<int>(per_color_heuristic(as_cdp).size()) >= ceil_div(cdp, q), "per-color below opt/q");
    for (Mode m : {Mode::Cdp, Mode::Cddp}) {
      int prev = 0;
      for (int l = 1; l < inst.graph.vertex_count(); ++l) {
        const int v = exact(inst, m, l);
        L.expect(v >= prev, "value decreases with l");
        prev = v;
      }
      L.expect(prev == (m == Mode::Cdp ? cdp : cddp), "bounded value at l = n-1 differs from unbounded");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Ledger&)>>> criteria{
      {"two-color diamond: exact values, greedy trap, approximation", diamond},
      {"threshold set example: reduced graph, lifted paths, optimum", threshold_example},
      {"cubic independent set reduction identity (25 graphs)", cubic_reduction},
      {"threshold set reduction identity (25 instances)", threshold_reduction},
      {"tree solver equals oracle and matching size (50)", tree_solver},
      {"disjoint-paths (50) and xp (30) solvers equal oracle", disjoint_and_xp},
      {"color coding soundness (10^4 labelings) and completeness (60)", color_coding},
      {"vertex cover solver equals oracle, residual paths <= 2k (50)", vertex_cover_fpt},
      {"approximation within ceil(opt/2)..opt (50)", approximation},
      {"structural invariants over the random corpus", structure},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Ledger L;
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      run(L);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = error.empty() && L.failures == 0;
    failed += !ok;
    std::printf("%s [%2d] %s (%d checks, %.2fs)", ok ? "PASS" : "FAIL", index, name.c_str(), L.checks, secs);
    if (!error.empty()) std::printf(" exception: %s", error.c_str());
    if (L.failures) std::printf(" %d failed: %s", L.failures, L.why.str().c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
