#include "algorithms.hpp"

#include <algorithm>

#include "ecdp/color_coding.hpp"
#include "ecdp/disjoint_paths.hpp"
#include "ecdp/flow.hpp"
#include "ecdp/oracle.hpp"
#include "ecdp/tree_solver.hpp"
#include "ecdp/vc_solvers.hpp"
#include "ecdp/xp_solver.hpp"

namespace ecdp::cli {

using nlohmann::json;

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"oracle", "flow",        "per-color", "tree",     "disjoint-paths",
                                              "xp",     "color-coding", "vc-fpt",    "vc-approx"};
  return names;
}

namespace {

json vertices_json(const std::vector<Vertex>& v) { return json(v); }

int color_coding_cap(const ProblemInstance& inst) {
  auto open = inst;
  open.length_bound.reset();
  const auto flows = per_color_flow_values(open, Execution::Serial);
  int sum = 0;
  for (int f : flows) sum += f;
  if (inst.mode == Mode::Cddp) {
    int used = 0;
    for (int f : flows) used += f > 0;
    sum = std::min(sum, used);
  }
  return sum;
}

LabelingStrategy strategy_for(const ProblemInstance& inst, const SolveParams& p) {
  LabelingStrategy s;
  s.trials = p.trials;
  s.seed = p.seed;
  if (p.strategy == "random") {
    s.kind = StrategyKind::Random;
  } else if (p.strategy == "injective") {
    s.kind = StrategyKind::Injective;
  } else if (p.strategy == "witness") {
    s.kind = StrategyKind::Witness;
    s.witness = solve_exact(inst);
  } else if (p.strategy == "auto") {
    const auto lab = injective_labeling(inst);
    const int hc = inst.mode == Mode::Cddp ? lab.h_c : 0;
    s.kind = lab.h_v <= kMaxVertexLabels && hc <= kMaxColorLabels && lab.h_v + hc <= 24 ? StrategyKind::Injective
                                                                                         : StrategyKind::Random;
  } else {
    throw InvalidArgument("unknown strategy '" + p.strategy + "'");
  }
  return s;
}

std::string kind_name(StrategyKind k) {
  switch (k) {
    case StrategyKind::Random: return "random";
    case StrategyKind::Injective: return "injective";
    case StrategyKind::Witness: return "witness";
  }
  return "?";
}

}  // namespace

SolveOutcome run_algorithm(const ProblemInstance& inst, const SolveParams& p) {
  SolveOutcome out;
  const std::string& a = p.algo;
  if (a == "oracle") {
    const auto paths = enumerate_unicolor_paths(inst, kDefaultPathCap, p.exec);
    out.stats["unicolor_paths"] = paths.size();
    out.solution = solve_exact(inst, {kDefaultPathCap, p.exec});
  } else if (a == "flow") {
    if (inst.mode != Mode::Cdp) throw PreconditionError("flow solver returns same-colored paths; use cdp");
    ColorId c = 0;
    if (!p.color.empty()) {
      const auto id = inst.graph.find_color(p.color);
      if (!id) throw InvalidArgument("unknown color '" + p.color + "'");
      c = *id;
    } else if (inst.graph.color_count() != 1) {
      throw PreconditionError("flow solver needs a single-color instance or --color");
    }
    out.solution = solve_single_color_flow(inst, c);
    out.stats["color"] = inst.graph.color_name(c);
  } else if (a == "per-color") {
    out.stats["flow_values"] = per_color_flow_values(inst, p.exec);
    out.solution = per_color_heuristic(inst, p.exec);
  } else if (a == "tree") {
    const auto g = build_tree_matching_graph(inst);
    out.stats["left"] = g.left.size();
    out.stats["right"] = g.right.size();
    out.solution = solve_tree_cddp(inst);
    out.stats["matching"] = out.solution.size();
  } else if (a == "disjoint-paths") {
    out.solution = solve_disjoint_paths_cdp(inst);
  } else if (a == "xp") {
    const auto x = find_deletion_set(inst, p.distance_max);
    if (!x) {
      throw PreconditionError("no deletion set of size <= " + std::to_string(p.distance_max));
    }
    XpStats st;
    out.solution = solve_xp_cdp(inst, *x, p.exec, &st);
    out.stats["deletion_set"] = vertices_json(x->vertices);
    out.stats["single_guesses"] = st.single_guesses;
    out.stats["accepted_guesses"] = st.accepted_guesses;
    out.stats["combinations"] = st.combinations;
  } else if (a == "color-coding") {
    const int l = p.max_len ? *p.max_len : (inst.length_bound ? *inst.length_bound : 0);
    if (l < 1) throw PreconditionError("color coding needs --max-len");
    const auto strategy = strategy_for(inst, p);
    out.stats["strategy"] = kind_name(strategy.kind);
    out.stats["max_len"] = l;
    ColorCodingResult r;
    if (p.target) {
      r = inst.mode == Mode::Cddp ? solve_l_cddp(inst, l, *p.target, strategy, p.exec)
                                  : solve_l_cdp(inst, l, *p.target, strategy, p.exec);
      out.stats["target"] = *p.target;
      out.stats["accepted"] = r.accepted;
    } else {
      const int cap = color_coding_cap(inst);
      out.stats["k_max"] = cap;
      r = maximize_color_coding(inst, l, cap, strategy, p.exec);
    }
    out.stats["trial"] = r.trial;
    out.stats["trials_run"] = r.trials_run;
    out.solution = r.witness;
    out.solution.mode = inst.mode;
  } else if (a == "vc-fpt") {
    VcOptions o;
    o.execution = p.exec;
    const auto r = solve_cdp_vc(inst, o);
    const auto& d = r.decomposition;
    out.solution = r.solution;
    out.stats["prefix_value"] = d.prefix.size();
    out.stats["cover"] = vertices_json(d.cover);
    out.stats["cover_size"] = d.k;
    out.stats["residual_length_bound"] = d.residual_length;
  } else if (a == "vc-approx") {
    if (inst.mode != Mode::Cddp) throw PreconditionError("vc-approx approximates MaxCDDP; use cddp");
    VcOptions o;
    o.execution = p.exec;
    const auto r = approx_cddp_vc(inst, o);
    out.solution = r.solution;
    out.stats["greedy_value"] = r.greedy.size();
    out.stats["direct_color"] = r.direct_color ? json(inst.graph.color_name(*r.direct_color)) : json(nullptr);
    out.stats["h_cover_size"] = r.h_cover;
    out.stats["h_value"] = r.h_value;
    out.stats["ratio"] = "opt <= 2 * value";
    out.stats["upper_bound"] = 2 * r.solution.size();
  } else {
    throw InvalidArgument("unknown algorithm '" + a + "'");
  }
  return out;
}

json params_json(const SolveParams& p) {
  json j{{"trials", p.trials}, {"seed", p.seed}, {"strategy", p.strategy}, {"distance_max", p.distance_max}};
  j["max_len"] = p.max_len ? json(*p.max_len) : json(nullptr);
  j["target"] = p.target ? json(*p.target) : json(nullptr);
  if (!p.color.empty()) j["color"] = p.color;
  return j;
}

}  // namespace ecdp::cli
