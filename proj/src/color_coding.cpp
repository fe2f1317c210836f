#include "ecdp/color_coding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

namespace ecdp {

namespace {

int interior_count(const ProblemInstance& inst) {
  return inst.graph.vertex_count() - 2;
}

std::uint32_t bit(int label) { return std::uint32_t{1} << label; }

}  // namespace

LabelBudget label_budget(const ProblemInstance& inst, int l, int k) {
  if (l < 1) throw InvalidArgument("length bound must be at least 1");
  if (k < 0) throw InvalidArgument("target must be nonnegative");
  LabelBudget b;
  const long long want = static_cast<long long>(k) * (l - 1);
  b.h_v = static_cast<int>(std::min<long long>(want, std::max(0, interior_count(inst))));
  b.h_c = std::min(k, inst.graph.color_count());
  if (b.h_v > kMaxVertexLabels) {
    throw InvalidArgument("k(l-1) = " + std::to_string(b.h_v) + " exceeds the supported " +
                          std::to_string(kMaxVertexLabels) + " vertex labels");
  }
  if (b.h_c > kMaxColorLabels) {
    throw InvalidArgument("too many color labels (" + std::to_string(b.h_c) + ")");
  }
  return b;
}

Labeling random_labeling(const ProblemInstance& inst, LabelBudget budget, std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  Labeling lab;
  lab.h_v = budget.h_v;
  lab.h_c = budget.h_c;
  const auto& g = inst.graph;
  lab.vertex_label.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  lab.color_label.assign(static_cast<std::size_t>(g.color_count()), -1);

  auto fill = [&](std::vector<int*> slots, int h) {
    if (h <= 0) return;
    if (static_cast<int>(slots.size()) == h) {
      std::vector<int> perm(slots.size());
      for (int i = 0; i < h; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t i = 0; i < slots.size(); ++i) *slots[i] = perm[i];
      return;
    }
    std::uniform_int_distribution<int> pick(0, h - 1);
    for (int* slot : slots) *slot = pick(rng);
  };
  std::vector<int*> vslots;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != inst.source && v != inst.target) vslots.push_back(&lab.vertex_label[v]);
  }
  std::vector<int*> cslots;
  for (auto& c : lab.color_label) cslots.push_back(&c);
  fill(vslots, lab.h_v);
  fill(cslots, lab.h_c);
  return lab;
}

Labeling injective_labeling(const ProblemInstance& inst) {
  const auto& g = inst.graph;
  Labeling lab;
  lab.vertex_label.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  lab.color_label.assign(static_cast<std::size_t>(g.color_count()), -1);
  std::vector<char> used(static_cast<std::size_t>(g.color_count()), 0);
  for (const Edge& e : g.edges()) {
    for (ColorId c : e.colors) used[c] = 1;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != inst.source && v != inst.target && g.degree(v) > 0) lab.vertex_label[v] = lab.h_v++;
  }
  for (ColorId c = 0; c < g.color_count(); ++c) {
    if (used[c]) lab.color_label[c] = lab.h_c++;
  }
  return lab;
}

Labeling witness_labeling(const ProblemInstance& inst, const PathSolution& witness, LabelBudget budget) {
  const auto& g = inst.graph;
  Labeling lab;
  lab.h_v = budget.h_v;
  lab.h_c = budget.h_c;
  lab.vertex_label.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  lab.color_label.assign(static_cast<std::size_t>(g.color_count()), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != inst.source && v != inst.target && lab.h_v > 0) lab.vertex_label[v] = 0;
  }
  for (auto& c : lab.color_label) c = lab.h_c > 0 ? 0 : -1;
  std::vector<char> seen(lab.color_label.size(), 0);
  int next_v = 0;
  int next_c = 0;
  for (const auto& p : witness.paths) {
    for (Vertex v : p.internal()) {
      if (next_v >= lab.h_v) throw InvalidArgument("witness needs more vertex labels than the budget");
      lab.vertex_label[v] = next_v++;
    }
    if (!seen[p.color]) {
      seen[p.color] = 1;
      if (next_c < lab.h_c) lab.color_label[p.color] = next_c++;
    }
  }
  return lab;
}

// ------------------------------------------------------------------ tables

ColorCodingTables::ColorCodingTables(const ProblemInstance& inst, const Labeling& labeling, int l, int k_max,
                                     Mode mode, Execution exec)
    : inst_(inst), lab_(labeling), l_(l), k_max_(k_max), mode_(mode), hv_(labeling.h_v),
      hc_(mode == Mode::Cddp ? labeling.h_c : 0) {
  if (l < 1) throw InvalidArgument("length bound must be at least 1");
  if (k_max < 0) throw InvalidArgument("target must be nonnegative");
  if (hv_ < 0 || hv_ > kMaxVertexLabels || hc_ < 0 || hc_ > kMaxColorLabels || hv_ + hc_ > 24) {
    throw InvalidArgument("label budget outside the supported range");
  }
  const auto& g = inst.graph;
  const Vertex s = inst.source;
  const Vertex t = inst.target;
  const int q = g.color_count();

  local_.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int lv = lab_.vertex_label[v];
    if (v == s || v == t || lv < 0 || lv >= hv_) continue;
    local_[v] = static_cast<int>(interior_.size());
    interior_.push_back(v);
  }
  if (const ColorSet* cs = g.colors_between(s, t)) direct_colors_ = cs->ids();

  const std::uint32_t masks = std::uint32_t{1} << hv_;
  const int max_internal = l - 1;
  const std::size_t ni = interior_.size();

  s_.assign(static_cast<std::size_t>(q), {});
  a_.assign(static_cast<std::size_t>(q), std::vector<std::uint8_t>(masks, 0));

  auto fill_color = [&](ColorId c) {
    bool at_s = false;
    bool at_t = false;
    for (Vertex v : interior_) {
      at_s = at_s || g.has_color(s, v, c);
      at_t = at_t || g.has_color(v, t, c);
    }
    if (!at_s || !at_t || max_internal < 1) return;
    std::vector<std::vector<int>> nb(ni);
    for (std::size_t i = 0; i < ni; ++i) {
      for (const Incidence& inc : g.incident(interior_[i])) {
        const int j = local_[inc.other];
        if (j >= 0 && g.edges()[inc.edge].colors.contains(c)) nb[i].push_back(j);
      }
    }
    auto& S = s_[c];
    S.assign(static_cast<std::size_t>(masks) * ni, 0);
    for (std::uint32_t mask = 1; mask < masks; ++mask) {
      if (std::popcount(mask) > max_internal) continue;
      for (std::size_t i = 0; i < ni; ++i) {
        const int lu = lab_.vertex_label[interior_[i]];
        if (!(mask & bit(lu))) continue;
        const std::uint32_t rest = mask ^ bit(lu);
        bool ok = false;
        if (rest == 0) {
          ok = g.has_color(s, interior_[i], c);
        } else {
          for (int j : nb[i]) {
            if (S[s_index(rest, j)]) {
              ok = true;
              break;
            }
          }
        }
        if (ok) {
          S[s_index(mask, static_cast<int>(i))] = 1;
          if (g.has_color(interior_[i], t, c)) a_[c][mask] = 1;
        }
      }
    }
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (ColorId c = 0; c < q; ++c) fill_color(c);
  } else {
    for (ColorId c = 0; c < q; ++c) fill_color(c);
  }

  const int rows = mode_ == Mode::Cddp ? hc_ : 1;
  b_.assign(static_cast<std::size_t>(rows), std::vector<std::uint8_t>(masks, 0));
  for (ColorId c = 0; c < q; ++c) {
    const int row = mode_ == Mode::Cddp ? lab_.color_label[c] : 0;
    if (row < 0 || row >= rows) continue;
    for (std::uint32_t mask = 0; mask < masks; ++mask) b_[row][mask] |= a_[c][mask];
  }

  const std::uint32_t color_sets = std::uint32_t{1} << hc_;
  pi_.assign(static_cast<std::size_t>(k_max) + 1, std::vector<std::uint8_t>(static_cast<std::size_t>(masks) << hc_, 0));
  pi_[0][pi_index(0, 0)] = 1;
  for (int z = 1; z <= k_max; ++z) {
    auto& cur = pi_[z];
    const auto& prev = pi_[z - 1];
    for (std::uint32_t mask = 1; mask < masks; ++mask) {
      const int pc = std::popcount(mask);
      if (pc < z || pc > z * max_internal) continue;
      const std::uint32_t low = mask & (~mask + 1);
      for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
        if (!(sub & low) || std::popcount(sub) > max_internal) continue;
        const std::uint32_t rest = mask ^ sub;
        if (mode_ == Mode::Cdp) {
          if (b_[0][sub] && prev[pi_index(rest, 0)]) {
            cur[pi_index(mask, 0)] = 1;
            break;
          }
          continue;
        }
        for (int m = 0; m < hc_; ++m) {
          if (!b_[m][sub]) continue;
          for (std::uint32_t cs = 0; cs < color_sets; ++cs) {
            if ((cs & bit(m)) || !prev[pi_index(rest, cs)]) continue;
            cur[pi_index(mask, cs | bit(m))] = 1;
          }
        }
      }
    }
  }
}

bool ColorCodingTables::s_entry(std::uint32_t mask, Vertex u, ColorId lambda) const {
  if (!inst_.graph.valid_vertex(u) || local_[u] < 0) return false;
  if (mask >= (std::uint32_t{1} << hv_)) return false;
  const auto& S = s_[lambda];
  return !S.empty() && S[s_index(mask, local_[u])];
}

bool ColorCodingTables::pi_entry(std::uint32_t mask, std::uint32_t colors, int z) const {
  if (z < 0 || z > k_max_ || mask >= (std::uint32_t{1} << hv_)) return false;
  if (mode_ == Mode::Cdp) colors = 0;
  if (colors >= (std::uint32_t{1} << hc_)) return false;
  return pi_[z][pi_index(mask, colors)] != 0;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> ColorCodingTables::pi_cell(
    int z, Acceptance rule, std::optional<int> free_label) const {
  const std::uint32_t masks = std::uint32_t{1} << hv_;
  const std::uint32_t color_sets = std::uint32_t{1} << hc_;
  const std::uint32_t full_mask = masks - 1;
  std::uint32_t full_colors = color_sets - 1;
  if (free_label && *free_label >= 0 && *free_label < hc_) full_colors &= ~bit(*free_label);
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    if (rule == Acceptance::FullLabelSet && mask != full_mask) continue;
    for (std::uint32_t cs = 0; cs < color_sets; ++cs) {
      if (!pi_[z][pi_index(mask, cs)]) continue;
      if (free_label && *free_label >= 0 && *free_label < hc_ && (cs & bit(*free_label))) continue;
      if (rule == Acceptance::FullLabelSet && mode_ == Mode::Cddp && cs != full_colors) continue;
      return std::make_pair(mask, cs);
    }
  }
  return std::nullopt;
}

bool ColorCodingTables::pi_any(int z, Acceptance rule, std::optional<int> free_label) const {
  return pi_cell(z, rule, free_label).has_value();
}

bool ColorCodingTables::accepts(int k, Acceptance rule) const {
  if (k < 0 || k > k_max_) return false;
  if (pi_any(k, rule, std::nullopt)) return true;
  if (k == 0) return rule == Acceptance::AnySubset;
  for (ColorId c : direct_colors_) {
    const std::optional<int> free = mode_ == Mode::Cddp ? std::optional<int>(lab_.color_label[c]) : std::nullopt;
    if (pi_any(k - 1, rule, free)) return true;
  }
  return false;
}

int ColorCodingTables::best(Acceptance rule) const {
  for (int k = k_max_; k > 0; --k) {
    if (accepts(k, rule)) return k;
  }
  return 0;
}

std::vector<Vertex> ColorCodingTables::trace_s(std::uint32_t mask, Vertex u, ColorId lambda) const {
  const auto& g = inst_.graph;
  std::vector<Vertex> rev{u};
  while (true) {
    const std::uint32_t rest = mask ^ bit(lab_.vertex_label[u]);
    if (rest == 0) break;
    Vertex next = kNoVertex;
    for (const Incidence& inc : g.incident(u)) {
      const Vertex w = inc.other;
      if (local_[w] < 0 || !g.edges()[inc.edge].colors.contains(lambda)) continue;
      if (s_[lambda][s_index(rest, local_[w])] && (next == kNoVertex || w < next)) next = w;
    }
    rev.push_back(next);
    u = next;
    mask = rest;
  }
  rev.push_back(inst_.source);
  std::reverse(rev.begin(), rev.end());
  return rev;
}

void ColorCodingTables::unwind(std::uint32_t mask, std::uint32_t colors, int z, std::vector<UniColorPath>& out) const {
  if (z == 0) return;
  const auto& g = inst_.graph;
  const std::uint32_t low = mask & (~mask + 1);
  for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
    if (!(sub & low) || std::popcount(sub) > l_ - 1) continue;
    const std::uint32_t rest = mask ^ sub;
    for (ColorId c = 0; c < g.color_count(); ++c) {
      if (!a_[c][sub]) continue;
      std::uint32_t rest_colors = 0;
      if (mode_ == Mode::Cddp) {
        const int m = lab_.color_label[c];
        if (m < 0 || m >= hc_ || !(colors & bit(m))) continue;
        rest_colors = colors ^ bit(m);
      }
      if (!pi_[z - 1][pi_index(rest, rest_colors)]) continue;
      for (Vertex u : interior_) {
        if (!g.has_color(u, inst_.target, c) || !s_entry(sub, u, c)) continue;
        auto verts = trace_s(sub, u, c);
        verts.push_back(inst_.target);
        out.push_back({std::move(verts), c});
        unwind(rest, rest_colors, z - 1, out);
        return;
      }
    }
  }
}

std::optional<PathSolution> ColorCodingTables::extract(int k, Acceptance rule) const {
  if (k < 0 || k > k_max_) return std::nullopt;
  PathSolution sol;
  sol.mode = mode_;
  if (auto cell = pi_cell(k, rule, std::nullopt)) {
    unwind(cell->first, cell->second, k, sol.paths);
    return sol;
  }
  if (k == 0) return std::nullopt;
  for (ColorId c : direct_colors_) {
    const std::optional<int> free = mode_ == Mode::Cddp ? std::optional<int>(lab_.color_label[c]) : std::nullopt;
    if (auto cell = pi_cell(k - 1, rule, free)) {
      sol.paths.push_back({{inst_.source, inst_.target}, c});
      unwind(cell->first, cell->second, k - 1, sol.paths);
      return sol;
    }
  }
  return std::nullopt;
}

// ----------------------------------------------------------------- drivers

namespace {

std::size_t trial_count(const LabelingStrategy& strategy) {
  return strategy.kind == StrategyKind::Random ? strategy.trials : 1;
}

Labeling make_labeling(const ProblemInstance& inst, const LabelingStrategy& strategy, LabelBudget budget,
                       std::size_t trial) {
  switch (strategy.kind) {
    case StrategyKind::Random:
      return random_labeling(inst, budget, strategy.seed, trial);
    case StrategyKind::Injective: {
      auto lab = injective_labeling(inst);
      if (lab.h_v > kMaxVertexLabels || lab.h_c > kMaxColorLabels) {
        throw InvalidArgument("instance too large for injective labels");
      }
      return lab;
    }
    case StrategyKind::Witness:
      if (!strategy.witness) throw InvalidArgument("witness strategy needs a witness solution");
      return witness_labeling(inst, *strategy.witness, budget);
  }
  throw InvalidArgument("unknown strategy");
}

LabelBudget budget_for(const ProblemInstance& inst, const LabelingStrategy& strategy, int l, int k) {
  if (strategy.kind == StrategyKind::Injective) {
    if (l < 1) throw InvalidArgument("length bound must be at least 1");
    if (k < 0) throw InvalidArgument("target must be nonnegative");
    return {};
  }
  return label_budget(inst, l, k);
}

struct TrialOutcome {
  int value = -1;
  PathSolution witness;
};

// Runs the trials in chunks; `evaluate` maps a labeling to an outcome. With
// stop_at set, stops after the first chunk that reaches that value. The best
// value wins, lowest trial index on ties.
template <class Evaluate>
ColorCodingResult run_trials(const ProblemInstance& inst, const LabelingStrategy& strategy, LabelBudget budget,
                             Execution exec, std::optional<int> stop_at, Evaluate evaluate) {
  const std::size_t total = trial_count(strategy);
  const std::size_t chunk = exec == Execution::Parallel
                                ? static_cast<std::size_t>(std::max(1, omp_get_max_threads())) * 4
                                : 1;
  ColorCodingResult result;
  int best_value = -1;
  for (std::size_t start = 0; start < total; start += chunk) {
    const std::size_t end = std::min(total, start + chunk);
    std::vector<TrialOutcome> outcomes(end - start);
    if (exec == Execution::Parallel) {
      const auto count = static_cast<std::ptrdiff_t>(end - start);
#pragma omp parallel for schedule(dynamic, 1)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        outcomes[i] = evaluate(make_labeling(inst, strategy, budget, start + static_cast<std::size_t>(i)));
      }
    } else {
      for (std::size_t i = start; i < end; ++i) outcomes[i - start] = evaluate(make_labeling(inst, strategy, budget, i));
    }
    result.trials_run = end;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i].value > best_value) {
        best_value = outcomes[i].value;
        result.witness = std::move(outcomes[i].witness);
        result.trial = start + i;
      }
    }
    if (stop_at && best_value >= *stop_at) break;
  }
  result.accepted = best_value >= 0;
  return result;
}

ColorCodingResult decide(const ProblemInstance& inst, int l, int k, Mode mode, const LabelingStrategy& strategy,
                         Execution exec, Acceptance rule) {
  ProblemInstance bounded = inst;
  bounded.mode = mode;
  bounded.length_bound = l;
  const LabelBudget budget = budget_for(bounded, strategy, l, k);
  if (k == 0) {
    ColorCodingResult r;
    r.accepted = true;
    r.witness.mode = mode;
    r.trials_run = 0;
    return r;
  }
  // Trials are already spread across threads; each table is built serially.
  const Execution inner = Execution::Serial;
  auto result = run_trials(bounded, strategy, budget, exec, k, [&](const Labeling& lab) {
    TrialOutcome out;
    ColorCodingTables tables(bounded, lab, l, k, mode, inner);
    if (tables.accepts(k, rule)) {
      out.value = k;
      out.witness = *tables.extract(k, rule);
    }
    return out;
  });
  result.witness.mode = mode;
  return result;
}

}  // namespace

ColorCodingResult solve_l_cddp(const ProblemInstance& inst, int l, int k, const LabelingStrategy& strategy,
                               Execution exec, Acceptance rule) {
  return decide(inst, l, k, Mode::Cddp, strategy, exec, rule);
}

ColorCodingResult solve_l_cdp(const ProblemInstance& inst, int l, int k, const LabelingStrategy& strategy,
                              Execution exec, Acceptance rule) {
  return decide(inst, l, k, Mode::Cdp, strategy, exec, rule);
}

ColorCodingResult maximize_color_coding(const ProblemInstance& inst, int l, int k_max,
                                        const LabelingStrategy& strategy, Execution exec) {
  ProblemInstance bounded = inst;
  bounded.length_bound = l;
  const LabelBudget budget = budget_for(bounded, strategy, l, k_max);
  auto result = run_trials(bounded, strategy, budget, exec, k_max, [&](const Labeling& lab) {
    TrialOutcome out;
    ColorCodingTables tables(bounded, lab, l, k_max, inst.mode, Execution::Serial);
    out.value = tables.best();
    out.witness = *tables.extract(out.value);
    return out;
  });
  result.witness.mode = inst.mode;
  return result;
}

double recommended_trials(int k, int l, double delta) {
  if (delta <= 0.0 || delta >= 1.0) throw InvalidArgument("delta must lie in (0, 1)");
  return std::ceil(std::log(1.0 / delta) * std::exp(static_cast<double>(k) * (l - 1)) * std::exp(static_cast<double>(k)));
}

}  // namespace ecdp
