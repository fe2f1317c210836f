#include "ecdp/xp_solver.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ecdp/disjoint_paths.hpp"

namespace ecdp {

std::optional<DeletionSet> find_deletion_set(const ProblemInstance& inst, int d_max) {
  if (d_max < 0) throw InvalidArgument("d_max must be nonnegative");
  const auto interior = interior_vertices(inst);
  const int m = static_cast<int>(interior.size());
  for (int d = 0; d <= std::min(d_max, m); ++d) {
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
      std::vector<Vertex> removed{inst.source, inst.target};
      for (int i : idx) removed.push_back(interior[i]);
      if (is_disjoint_paths(inst.graph, removed)) {
        DeletionSet x;
        for (int i : idx) x.vertices.push_back(interior[i]);
        x.interior_paths = induced_paths(inst.graph, removed);
        return x;
      }
      int pos = d - 1;
      while (pos >= 0 && idx[pos] == m - d + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<UniColorPath> assemble_unicolor_path(const ProblemInstance& inst,
                                                   const std::vector<std::vector<Vertex>>& pieces) {
  const auto& g = inst.graph;
  std::size_t total = 2;
  for (const auto& p : pieces) total += p.size();
  if (inst.length_bound && total - 1 > static_cast<std::size_t>(*inst.length_bound)) return std::nullopt;

  const std::size_t k = pieces.size();
  std::vector<char> used(k, 0);
  std::vector<Vertex> seq;
  seq.reserve(total);

  for (ColorId c = 0; c < g.color_count(); ++c) {
    bool inner_ok = true;
    for (const auto& p : pieces) {
      for (std::size_t i = 0; i + 1 < p.size() && inner_ok; ++i) inner_ok = g.has_color(p[i], p[i + 1], c);
    }
    if (!inner_ok) continue;

    seq.assign(1, inst.source);
    std::fill(used.begin(), used.end(), 0);
    std::function<bool(std::size_t)> place = [&](std::size_t placed) {
      if (placed == k) return g.has_color(seq.back(), inst.target, c);
      for (std::size_t i = 0; i < k; ++i) {
        if (used[i]) continue;
        const auto& p = pieces[i];
        for (int orient = 0; orient < (p.size() > 1 ? 2 : 1); ++orient) {
          const Vertex entry = orient == 0 ? p.front() : p.back();
          if (!g.has_color(seq.back(), entry, c)) continue;
          const std::size_t mark = seq.size();
          if (orient == 0) {
            seq.insert(seq.end(), p.begin(), p.end());
          } else {
            seq.insert(seq.end(), p.rbegin(), p.rend());
          }
          used[i] = 1;
          if (place(placed + 1)) return true;
          used[i] = 0;
          seq.resize(mark);
        }
      }
      return false;
    };
    if (place(0)) {
      seq.push_back(inst.target);
      return UniColorPath{seq, c};
    }
  }
  return std::nullopt;
}

namespace {

struct Range {
  std::size_t component;
  std::size_t first;
  std::size_t last;
  std::vector<Vertex> vertices;
};

struct Guess {
  std::vector<Vertex> vertices;  // sorted internal vertex set
  UniColorPath path;
};

bool overlaps(const Range& a, const Range& b) {
  return a.component == b.component && !(a.last < b.first || b.last < a.first);
}

// Ranges whose two ends can each attach to s, t or a vertex of xi.
std::vector<Range> attachable_ranges(const ProblemInstance& inst, const DeletionSet& x,
                                     const std::vector<Vertex>& xi) {
  const auto& g = inst.graph;
  std::vector<Vertex> anchors = xi;
  anchors.push_back(inst.source);
  anchors.push_back(inst.target);
  auto anchor_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex a : anchors) d += g.has_edge(v, a) ? 1 : 0;
    return d;
  };
  std::vector<Range> out;
  for (std::size_t ci = 0; ci < x.interior_paths.size(); ++ci) {
    const auto& seq = x.interior_paths[ci];
    for (std::size_t a = 0; a < seq.size(); ++a) {
      const int da = anchor_degree(seq[a]);
      if (da == 0) continue;
      std::vector<ColorId> common;
      for (ColorId c = 0; c < g.color_count(); ++c) common.push_back(c);
      for (std::size_t b = a; b < seq.size(); ++b) {
        if (b > a) {
          const ColorSet* cs = g.colors_between(seq[b - 1], seq[b]);
          std::vector<ColorId> next;
          for (ColorId c : common) {
            if (cs && cs->contains(c)) next.push_back(c);
          }
          common.swap(next);
        }
        if (common.empty()) break;
        if (inst.length_bound && b - a + 3 > static_cast<std::size_t>(*inst.length_bound)) break;
        const bool ends_ok = a == b ? da >= 2 : anchor_degree(seq[b]) >= 1;
        if (!ends_ok) continue;
        out.push_back({ci, a, b, std::vector<Vertex>(seq.begin() + static_cast<std::ptrdiff_t>(a),
                                                     seq.begin() + static_cast<std::ptrdiff_t>(b) + 1)});
      }
    }
  }
  return out;
}

std::vector<Guess> enumerate_guesses(const ProblemInstance& inst, const DeletionSet& x, XpStats& stats) {
  std::vector<Guess> accepted;
  std::set<std::vector<Vertex>> seen;
  const std::size_t d = x.vertices.size();
  for (std::uint32_t mask = 1; mask < (1U << d); ++mask) {
    std::vector<Vertex> xi;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask >> i & 1U) xi.push_back(x.vertices[i]);
    }
    const auto ranges = attachable_ranges(inst, x, xi);
    const std::size_t max_ranges = xi.size() + 1;
    std::vector<std::size_t> chosen;

    std::function<void(std::size_t)> pick = [&](std::size_t from) {
      std::vector<std::vector<Vertex>> pieces;
      std::vector<Vertex> key = xi;
      for (Vertex v : xi) pieces.push_back({v});
      for (std::size_t r : chosen) {
        pieces.push_back(ranges[r].vertices);
        key.insert(key.end(), ranges[r].vertices.begin(), ranges[r].vertices.end());
      }
      std::sort(key.begin(), key.end());
      ++stats.single_guesses;
      if (!seen.count(key)) {
        if (auto path = assemble_unicolor_path(inst, pieces)) {
          seen.insert(key);
          accepted.push_back({std::move(key), std::move(*path)});
        }
      }
      if (chosen.size() == max_ranges) return;
      for (std::size_t r = from; r < ranges.size(); ++r) {
        bool clash = false;
        for (std::size_t c : chosen) clash = clash || overlaps(ranges[c], ranges[r]);
        if (clash) continue;
        chosen.push_back(r);
        pick(r + 1);
        chosen.pop_back();
      }
    };
    pick(0);
  }
  return accepted;
}

bool disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

PathSolution residual_solution(const ProblemInstance& base, const std::vector<Guess>& guesses,
                               const std::vector<std::size_t>& combo) {
  std::vector<Vertex> removed;
  for (std::size_t i : combo) removed.insert(removed.end(), guesses[i].vertices.begin(), guesses[i].vertices.end());
  return solve_disjoint_paths_cdp(with_graph(base, remove_vertices(base.graph, removed)));
}

struct Best {
  std::size_t value = 0;
  std::vector<std::size_t> combo;
  bool set = false;
  std::size_t combinations = 0;
};

// Best combination whose smallest guess index is `first` (the empty one when
// first == guesses.size()).
Best best_from(const ProblemInstance& base, const std::vector<Guess>& guesses, std::size_t first) {
  Best best;
  std::vector<std::size_t> combo;
  auto consider = [&]() {
    ++best.combinations;
    const std::size_t value = combo.size() + residual_solution(base, guesses, combo).size();
    if (!best.set || value > best.value) {
      best.value = value;
      best.combo = combo;
      best.set = true;
    }
  };
  if (first == guesses.size()) {
    consider();
    return best;
  }
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    consider();
    for (std::size_t j = from; j < guesses.size(); ++j) {
      bool ok = true;
      for (std::size_t i : combo) ok = ok && disjoint(guesses[i].vertices, guesses[j].vertices);
      if (!ok) continue;
      combo.push_back(j);
      extend(j + 1);
      combo.pop_back();
    }
  };
  combo.push_back(first);
  extend(first + 1);
  return best;
}

}  // namespace

PathSolution solve_xp_cdp(const ProblemInstance& inst, const DeletionSet& x, Execution exec, XpStats* stats) {
  if (inst.mode != Mode::Cdp) throw PreconditionError("XP solver handles CDP only");
  for (Vertex v : x.vertices) {
    if (!inst.graph.valid_vertex(v) || v == inst.source || v == inst.target) {
      throw PreconditionError("deletion set contains an invalid vertex");
    }
  }
  std::vector<Vertex> removed = x.vertices;
  removed.push_back(inst.source);
  removed.push_back(inst.target);
  if (!is_disjoint_paths(inst.graph, removed)) throw PreconditionError("not a deletion set to disjoint paths");

  DeletionSet xs = x;
  std::sort(xs.vertices.begin(), xs.vertices.end());
  xs.interior_paths = induced_paths(inst.graph, removed);

  XpStats local;
  const auto guesses = enumerate_guesses(inst, xs, local);
  local.accepted_guesses = guesses.size();

  // Unused X vertices cannot carry residual paths, every X-touching path is guessed.
  const ProblemInstance base = with_graph(inst, remove_vertices(inst.graph, xs.vertices));

  const std::size_t slots = guesses.size() + 1;
  std::vector<Best> results(slots);
  // Slot order: the empty combination first, then by first guess index.
  auto slot_first = [&](std::size_t slot) { return slot == 0 ? guesses.size() : slot - 1; };
  if (exec == Execution::Serial) {
    for (std::size_t slot = 0; slot < slots; ++slot) results[slot] = best_from(base, guesses, slot_first(slot));
  } else {
    const auto count = static_cast<std::ptrdiff_t>(slots);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t slot = 0; slot < count; ++slot) {
      results[slot] = best_from(base, guesses, slot_first(static_cast<std::size_t>(slot)));
    }
  }

  const Best* best = &results[0];
  for (const Best& r : results) {
    local.combinations += r.combinations;
    if (r.value > best->value) best = &r;
  }
  if (stats) *stats = local;

  PathSolution sol;
  sol.mode = Mode::Cdp;
  for (std::size_t i : best->combo) sol.paths.push_back(guesses[i].path);
  sol.append(residual_solution(base, guesses, best->combo));
  return sol;
}

PathSolution solve_xp_cdp(const ProblemInstance& inst, int d_max, Execution exec, XpStats* stats) {
  const auto x = find_deletion_set(inst, d_max);
  if (!x) {
    throw PreconditionError("no deletion set of size at most " + std::to_string(d_max) + " to disjoint paths");
  }
  return solve_xp_cdp(inst, *x, exec, stats);
}

}  // namespace ecdp
