#include "ecdp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <functional>
#include <map>

namespace ecdp {

// -------------------------------------------------------------- enumeration

std::vector<UniColorPath> enumerate_paths_of_color(const ProblemInstance& inst, ColorId c,
                                                   std::size_t cap) {
  const auto adj = inst.graph.color_adjacency(c);
  const Vertex s = inst.source;
  const Vertex t = inst.target;
  const std::size_t max_edges = inst.length_bound
                                    ? static_cast<std::size_t>(*inst.length_bound)
                                    : static_cast<std::size_t>(inst.graph.vertex_count());

  std::vector<UniColorPath> out;
  std::vector<char> on_path(static_cast<std::size_t>(inst.graph.vertex_count()), 0);
  std::vector<Vertex> stack{s};
  on_path[s] = 1;

  std::function<void(Vertex)> dfs = [&](Vertex u) {
    if (stack.size() - 1 >= max_edges) return;
    for (Vertex w : adj[u]) {
      if (on_path[w]) continue;
      if (w == t) {
        if (out.size() >= cap) {
          throw OverflowError("uni-color path enumeration exceeded the cap of " + std::to_string(cap), cap);
        }
        auto verts = stack;
        verts.push_back(t);
        out.push_back({std::move(verts), c});
        continue;
      }
      on_path[w] = 1;
      stack.push_back(w);
      dfs(w);
      stack.pop_back();
      on_path[w] = 0;
    }
  };
  dfs(s);
  return out;
}

std::vector<UniColorPath> enumerate_unicolor_paths(const ProblemInstance& inst, std::size_t cap,
                                                   Execution exec) {
  const int q = inst.graph.color_count();
  std::vector<std::vector<UniColorPath>> per_color(static_cast<std::size_t>(q));

  if (exec == Execution::Serial) {
    for (ColorId c = 0; c < q; ++c) per_color[c] = enumerate_paths_of_color(inst, c, cap);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (ColorId c = 0; c < q; ++c) {
      try {
        per_color[c] = enumerate_paths_of_color(inst, c, cap);
      } catch (...) {
#pragma omp critical(ecdp_enumeration_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<UniColorPath> all;
  for (auto& bucket : per_color) {
    if (all.size() + bucket.size() > cap) {
      throw OverflowError("uni-color path enumeration exceeded the cap of " + std::to_string(cap), cap);
    }
    all.insert(all.end(), std::make_move_iterator(bucket.begin()), std::make_move_iterator(bucket.end()));
  }
  return all;
}

// ----------------------------------------------------------- conflict graph

bool paths_conflict(const UniColorPath& a, const UniColorPath& b, Mode mode) {
  if (mode == Mode::Cddp && a.color == b.color) return true;
  if (a.vertices == b.vertices) return true;
  for (Vertex x : a.internal()) {
    for (Vertex y : b.internal()) {
      if (x == y) return true;
    }
  }
  return false;
}

ConflictGraph::ConflictGraph(std::vector<UniColorPath> paths, Mode mode) : paths_(std::move(paths)) {
  const std::size_t p = paths_.size();
  rows_.assign(p, DynamicBitset(p));

  std::map<Vertex, std::vector<std::size_t>> by_vertex;
  std::map<ColorId, std::vector<std::size_t>> by_color;
  std::map<std::vector<Vertex>, std::vector<std::size_t>> by_sequence;
  for (std::size_t i = 0; i < p; ++i) {
    for (Vertex v : paths_[i].internal()) by_vertex[v].push_back(i);
    if (mode == Mode::Cddp) by_color[paths_[i].color].push_back(i);
    by_sequence[paths_[i].vertices].push_back(i);
  }
  auto link_group = [&](const std::vector<std::size_t>& group) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        rows_[group[a]].set(group[b]);
        rows_[group[b]].set(group[a]);
      }
    }
  };
  for (const auto& [v, g] : by_vertex) link_group(g);
  for (const auto& [c, g] : by_color) link_group(g);
  for (const auto& [seq, g] : by_sequence) link_group(g);
}

// ------------------------------------------------------------ exact MIS B&B

namespace {

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const ConflictGraph& g) : g_(g) {}

  std::vector<std::size_t> run() {
    const std::size_t n = g_.size();
    DynamicBitset all(n);
    all.set_all();

    // Greedy lower bound. The incumbent starts one below it so that the first
    // set of that size found in include-first order (the lexicographically
    // smallest one) is still recorded.
    std::size_t greedy = 0;
    DynamicBitset free = all;
    for (std::size_t v = free.first(); v < n; v = free.first()) {
      ++greedy;
      free.reset(v);
      free.subtract(g_.row(v));
    }
    best_size_ = greedy - 1;

    std::vector<std::size_t> current;
    expand(current, all);
    return best_;
  }

 private:
  std::size_t clique_cover_bound(DynamicBitset candidates) const {
    std::size_t cliques = 0;
    const std::size_t n = g_.size();
    for (std::size_t v = candidates.first(); v < n; v = candidates.first()) {
      ++cliques;
      candidates.reset(v);
      DynamicBitset extend = candidates;
      extend &= g_.row(v);
      for (std::size_t u = extend.first(); u < n; u = extend.first()) {
        candidates.reset(u);
        extend.reset(u);
        extend &= g_.row(u);
      }
    }
    return cliques;
  }

  // best_size_ is the size a new incumbent has to beat.
  void expand(std::vector<std::size_t>& current, DynamicBitset candidates) {
    if (candidates.none()) {
      if (current.size() > best_size_) {
        best_ = current;
        best_size_ = current.size();
      }
      return;
    }
    if (current.size() + clique_cover_bound(candidates) <= best_size_) return;

    const std::size_t v = candidates.first();
    candidates.reset(v);
    {
      DynamicBitset with = candidates;
      with.subtract(g_.row(v));
      current.push_back(v);
      expand(current, std::move(with));
      current.pop_back();
    }
    expand(current, std::move(candidates));
  }

  const ConflictGraph& g_;
  std::vector<std::size_t> best_;
  std::size_t best_size_ = 0;
};

}  // namespace

std::vector<std::size_t> maximum_independent_set(const ConflictGraph& graph) {
  if (graph.size() == 0) return {};
  return IndependentSetSearch(graph).run();
}

PathSolution solve_exact(const ProblemInstance& inst, const OracleOptions& options) {
  auto paths = enumerate_unicolor_paths(inst, options.path_cap, options.execution);
  ConflictGraph cg(std::move(paths), inst.mode);
  PathSolution sol;
  sol.mode = inst.mode;
  for (std::size_t i : maximum_independent_set(cg)) sol.paths.push_back(cg.path(i));
  return sol;
}

// ------------------------------------------------------- source brute force

std::vector<std::int32_t> solve_is_bruteforce(const SimpleGraph& g, int limit) {
  if (g.vertex_count > limit || g.vertex_count > 62) {
    throw InvalidArgument("independent set brute force limited to " + std::to_string(limit) + " vertices");
  }
  const int n = g.vertex_count;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  std::uint64_t best = 0;
  int best_size = -1;
  std::function<void(std::uint64_t, std::uint64_t, int)> branch = [&](std::uint64_t cand,
                                                                       std::uint64_t cur, int size) {
    if (cand == 0) {
      if (size > best_size) {
        best_size = size;
        best = cur;
      }
      return;
    }
    if (size + std::popcount(cand) <= best_size) return;
    const int v = std::countr_zero(cand);
    const std::uint64_t bit = std::uint64_t{1} << v;
    branch(cand & ~bit & ~adj[v], cur | bit, size + 1);
    branch(cand & ~bit, cur, size);
  };
  const std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  branch(all, 0, 0);
  std::vector<std::int32_t> out;
  for (int v = 0; v < n; ++v) {
    if (best >> v & 1U) out.push_back(v);
  }
  return out;
}

std::vector<std::int32_t> solve_thresholdset_bruteforce(const ThresholdSetInstance& ts, int limit) {
  check_threshold_set(ts);
  if (ts.universe_size > limit || ts.universe_size > 30) {
    throw InvalidArgument("threshold set brute force limited to " + std::to_string(limit) + " elements");
  }
  std::vector<std::uint32_t> masks;
  for (const auto& s : ts.sets) {
    std::uint32_t m = 0;
    for (auto e : s) m |= 1U << e;
    masks.push_back(m);
  }
  const std::uint32_t total = 1U << ts.universe_size;
  std::uint32_t best = 0;
  int best_size = -1;
  for (std::uint32_t t = 0; t < total; ++t) {
    const int size = std::popcount(t);
    if (size <= best_size) continue;
    bool ok = true;
    for (std::size_t i = 0; i < masks.size() && ok; ++i) {
      ok = std::popcount(t & masks[i]) <= ts.weights[i];
    }
    if (ok) {
      best = t;
      best_size = size;
    }
  }
  std::vector<std::int32_t> out;
  for (std::int32_t e = 0; e < ts.universe_size; ++e) {
    if (best >> e & 1U) out.push_back(e);
  }
  return out;
}

}  // namespace ecdp
