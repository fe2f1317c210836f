#include "ecdp/vc_solvers.hpp"

#include <algorithm>
#include <functional>

#include "ecdp/flow.hpp"

namespace ecdp {

std::optional<std::vector<std::int32_t>> minimum_vertex_cover(const SimpleGraph& g, int k_max) {
  if (k_max < 0) throw InvalidArgument("k_max must be nonnegative");
  std::vector<char> in_cover(static_cast<std::size_t>(g.vertex_count), 0);
  std::vector<std::int32_t> chosen;

  std::function<bool(int)> search = [&](int budget) {
    const auto it = std::find_if(g.edges.begin(), g.edges.end(),
                                 [&](const auto& e) { return !in_cover[e.first] && !in_cover[e.second]; });
    if (it == g.edges.end()) return true;
    if (budget == 0) return false;
    for (std::int32_t v : {it->first, it->second}) {
      in_cover[v] = 1;
      chosen.push_back(v);
      if (search(budget - 1)) return true;
      chosen.pop_back();
      in_cover[v] = 0;
    }
    return false;
  };

  for (int depth = 0; depth <= k_max; ++depth) {
    if (search(depth)) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
  }
  return std::nullopt;
}

SimpleGraph underlying_graph(const EdgeColoredGraph& g) {
  SimpleGraph out;
  out.vertex_count = g.vertex_count();
  for (const Edge& e : g.edges()) out.edges.emplace_back(e.u, e.v);
  return out;
}

PathSolution greedy_length3(const ProblemInstance& inst, Mode mode) {
  PathSolution sol;
  sol.mode = mode;
  if (inst.length_bound && *inst.length_bound < 2) return sol;
  const auto& g = inst.graph;
  std::vector<char> used(static_cast<std::size_t>(g.color_count()), 0);
  for (Vertex v : interior_vertices(inst)) {
    const ColorSet* in = g.colors_between(inst.source, v);
    const ColorSet* out = g.colors_between(v, inst.target);
    if (!in || !out) continue;
    for (ColorId c : *in) {
      if (!out->contains(c) || (mode == Mode::Cddp && used[c])) continue;
      sol.paths.push_back({{inst.source, v, inst.target}, c});
      used[c] = 1;
      break;
    }
  }
  return sol;
}

namespace {

std::vector<Vertex> internal_vertices_of(const PathSolution& sol) {
  std::vector<Vertex> out;
  for (const auto& p : sol.paths) out.insert(out.end(), p.internal().begin(), p.internal().end());
  return out;
}

LabelingStrategy pick_strategy(const ProblemInstance& inst, Mode mode, const VcOptions& options) {
  if (options.strategy) return *options.strategy;
  const Labeling lab = injective_labeling(inst);
  const int hc = mode == Mode::Cddp ? lab.h_c : 0;
  LabelingStrategy s;
  if (lab.h_v <= kMaxVertexLabels && hc <= kMaxColorLabels && lab.h_v + hc <= 24) {
    s.kind = StrategyKind::Injective;
  } else {
    s.kind = StrategyKind::Random;
  }
  return s;
}

int bounded_length(const ProblemInstance& inst, int k) {
  int l = 2 * k;
  if (inst.length_bound) l = std::min(l, *inst.length_bound);
  return l;
}

}  // namespace

VcDecomposition decompose_for_vc(const ProblemInstance& inst) {
  VcDecomposition d;
  d.prefix.mode = Mode::Cdp;
  if (const ColorSet* direct = inst.graph.colors_between(inst.source, inst.target)) {
    d.prefix.paths.push_back({{inst.source, inst.target}, direct->front()});
  }
  ProblemInstance rest = without_direct_edge(inst);
  rest.mode = Mode::Cdp;
  const PathSolution greedy = greedy_length3(rest, Mode::Cdp);
  d.prefix.append(greedy);
  const auto gone = internal_vertices_of(greedy);
  d.residual = with_graph(rest, remove_vertices(rest.graph, gone));
  const SimpleGraph sg = underlying_graph(d.residual.graph);
  d.cover = *minimum_vertex_cover(sg, sg.vertex_count);
  d.k = static_cast<int>(d.cover.size());
  d.residual_length = bounded_length(inst, d.k);
  return d;
}

VcResult solve_cdp_vc(const ProblemInstance& inst, const VcOptions& options) {
  if (inst.mode != Mode::Cdp) throw PreconditionError("vc-fpt solves CDP only");
  VcResult r;
  r.decomposition = decompose_for_vc(inst);
  const auto& d = r.decomposition;
  r.solution = d.prefix;
  if (d.k > 0 && d.residual_length >= 1) {
    const auto strategy = pick_strategy(d.residual, Mode::Cdp, options);
    const auto cc = maximize_color_coding(d.residual, d.residual_length, d.k, strategy, options.execution);
    r.solution.append(cc.witness);
  }
  r.solution.mode = Mode::Cdp;
  return r;
}

ProblemInstance build_H(const ProblemInstance& inst, const PathSolution& approx_a) {
  std::vector<ColorId> dropped;
  for (const auto& p : approx_a.paths) dropped.push_back(p.color);
  std::sort(dropped.begin(), dropped.end());
  dropped.erase(std::unique(dropped.begin(), dropped.end()), dropped.end());

  const EdgeColoredGraph step1 =
      restrict_colors(remove_vertices(inst.graph, internal_vertices_of(approx_a)), dropped);

  std::vector<std::vector<std::vector<Vertex>>> adjacency(static_cast<std::size_t>(step1.color_count()));
  for (ColorId c = 0; c < step1.color_count(); ++c) {
    if (!std::binary_search(dropped.begin(), dropped.end(), c)) adjacency[c] = step1.color_adjacency(c);
  }
  std::vector<Vertex> off_path;
  for (Vertex v = 0; v < step1.vertex_count(); ++v) {
    if (v == inst.source || v == inst.target || step1.degree(v) == 0) continue;
    bool keep = false;
    for (ColorId c = 0; c < step1.color_count() && !keep; ++c) {
      keep = !adjacency[c].empty() && on_simple_path(adjacency[c], inst.source, v, inst.target);
    }
    if (!keep) off_path.push_back(v);
  }
  ProblemInstance h = with_graph(inst, remove_vertices(step1, off_path));
  h.mode = Mode::Cddp;
  return h;
}

namespace {

ApproxResult approx_core(const ProblemInstance& inst, const VcOptions& options) {
  ApproxResult r;
  r.greedy = greedy_length3(inst, Mode::Cddp);
  r.solution = r.greedy;
  const ProblemInstance h = build_H(inst, r.greedy);
  const SimpleGraph sg = underlying_graph(h.graph);
  r.h_cover = static_cast<int>(minimum_vertex_cover(sg, sg.vertex_count)->size());
  const int l = bounded_length(inst, r.h_cover);
  const int k = std::min(r.h_cover, h.graph.color_count());
  if (k > 0 && l >= 1) {
    const auto cc = maximize_color_coding(h, l, k, pick_strategy(h, Mode::Cddp, options), options.execution);
    r.h_value = cc.witness.size();
    r.solution.append(cc.witness);
  }
  r.solution.mode = Mode::Cddp;
  return r;
}

}  // namespace

ApproxResult approx_cddp_vc(const ProblemInstance& inst, const VcOptions& options) {
  ProblemInstance base = without_direct_edge(inst);
  base.mode = Mode::Cddp;
  ApproxResult best = approx_core(base, options);
  if (const ColorSet* direct = inst.graph.colors_between(inst.source, inst.target)) {
    for (ColorId c : *direct) {
      const ColorId one[] = {c};
      ApproxResult r = approx_core(with_graph(base, restrict_colors(base.graph, one)), options);
      if (r.solution.size() + 1 > best.solution.size()) {
        r.solution.paths.insert(r.solution.paths.begin(), UniColorPath{{inst.source, inst.target}, c});
        r.direct_color = c;
        best = std::move(r);
      }
    }
  }
  return best;
}

}  // namespace ecdp
