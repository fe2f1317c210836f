#pragma once

// Brute-force reference answers computed independently of the library's
// algorithms; only the graph accessors are shared.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "ecdp/instance.hpp"
#include "ecdp/matching.hpp"
#include "ecdp/source_problems.hpp"

namespace reference {

using ecdp::ColorId;
using ecdp::Vertex;

struct RefPath {
  std::vector<Vertex> vertices;
  ColorId color;
  std::uint64_t internal;  // bit per internal vertex
};

// Simple s-t paths of the uncolored graph, one entry per common color.
inline std::vector<RefPath> all_paths(const ecdp::ProblemInstance& inst) {
  const auto& g = inst.graph;
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<RefPath> out;
  std::vector<Vertex> walk{inst.source};
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  on[inst.source] = 1;
  std::function<void()> go = [&] {
    const Vertex u = walk.back();
    if (u == inst.target) {
      if (inst.length_bound && static_cast<int>(walk.size()) - 1 > *inst.length_bound) return;
      for (ColorId c = 0; c < g.color_count(); ++c) {
        bool all = true;
        for (std::size_t i = 0; i + 1 < walk.size() && all; ++i) all = g.has_color(walk[i], walk[i + 1], c);
        if (!all) continue;
        std::uint64_t mask = 0;
        for (std::size_t i = 1; i + 1 < walk.size(); ++i) mask |= std::uint64_t{1} << walk[i];
        out.push_back({walk, c, mask});
      }
      return;
    }
    for (Vertex w : adj[u]) {
      if (on[w]) continue;
      on[w] = 1;
      walk.push_back(w);
      go();
      walk.pop_back();
      on[w] = 0;
    }
  };
  go();
  return out;
}

// Optimum by recursion over the set of still-free interior vertices: the
// lowest free vertex is either left unused or covered by a path whose
// lowest internal vertex it is.
inline int optimum(const ecdp::ProblemInstance& inst) {
  const auto paths = all_paths(inst);
  const bool cddp = inst.mode == ecdp::Mode::Cddp;
  std::vector<std::vector<const RefPath*>> by_low(64);
  std::vector<ColorId> direct;
  for (const auto& p : paths) {
    if (p.internal == 0) {
      direct.push_back(p.color);
    } else {
      by_low[static_cast<std::size_t>(std::countr_zero(p.internal))].push_back(&p);
    }
  }
  std::unordered_map<std::uint64_t, int> memo;
  std::uint64_t free_all = 0;
  for (const auto& p : paths) free_all |= p.internal;
  std::function<int(std::uint64_t, std::uint32_t)> best = [&](std::uint64_t free, std::uint32_t colors) {
    if (free == 0) return 0;
    const std::uint64_t key = free * 4096u + (cddp ? colors : 0u);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int v = std::countr_zero(free);
    int result = best(free & (free - 1), colors);
    for (const RefPath* p : by_low[static_cast<std::size_t>(v)]) {
      if ((p->internal & ~free) != 0) continue;
      if (cddp && (colors >> p->color & 1U)) continue;
      result = std::max(result, 1 + best(free & ~p->internal, colors | (1U << p->color)));
    }
    memo[key] = result;
    return result;
  };
  int value = best(free_all, 0);
  if (!direct.empty()) {
    if (!cddp) return value + 1;
    for (ColorId c : direct) value = std::max(value, 1 + best(free_all, 1U << c));
  }
  return value;
}

// Smallest interior vertex set whose removal disconnects s from t in the
// c-colored subgraph, plus one for a direct c-colored edge.
inline int min_vertex_cut(const ecdp::ProblemInstance& inst, ColorId c) {
  const auto& g = inst.graph;
  const int n = g.vertex_count();
  auto connected = [&](std::uint32_t removed) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{inst.source};
    seen[inst.source] = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(u)) {
        const Vertex w = inc.other;
        if (seen[w] || (removed >> w & 1U) || !g.has_color(u, w, c)) continue;
        if (u == inst.source && w == inst.target) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return seen[inst.target] != 0;
  };
  int best = n;
  for (std::uint32_t removed = 0; removed < (1U << n); ++removed) {
    if ((removed >> inst.source & 1U) || (removed >> inst.target & 1U)) continue;
    const int size = std::popcount(removed);
    if (size < best && !connected(removed)) best = size;
  }
  return best + (g.has_color(inst.source, inst.target, c) ? 1 : 0);
}

inline int max_matching_bruteforce(const ecdp::BipartiteGraph& bg) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < bg.left; ++u) {
    for (int r : bg.adjacency[u]) edges.emplace_back(u, r);
  }
  int best = 0;
  for (std::uint32_t pick = 0; pick < (1U << edges.size()); ++pick) {
    const int size = std::popcount(pick);
    if (size <= best) continue;
    std::uint64_t left = 0;
    std::uint64_t right = 0;
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!(pick >> i & 1U)) continue;
      const auto [u, r] = edges[i];
      ok = !(left >> u & 1U) && !(right >> r & 1U);
      left |= std::uint64_t{1} << u;
      right |= std::uint64_t{1} << r;
    }
    if (ok) best = size;
  }
  return best;
}

inline int max_independent_set_scan(const ecdp::SimpleGraph& g) {
  int best = 0;
  for (std::uint32_t set = 0; set < (1U << g.vertex_count); ++set) {
    bool ok = true;
    for (auto [u, v] : g.edges) ok = ok && !((set >> u & 1U) && (set >> v & 1U));
    if (ok) best = std::max(best, std::popcount(set));
  }
  return best;
}

inline int min_vertex_cover_scan(const ecdp::SimpleGraph& g) {
  int best = g.vertex_count;
  for (std::uint32_t set = 0; set < (1U << g.vertex_count); ++set) {
    bool ok = true;
    for (auto [u, v] : g.edges) ok = ok && ((set >> u & 1U) || (set >> v & 1U));
    if (ok) best = std::min(best, std::popcount(set));
  }
  return best;
}

inline int threshold_set_scan(const ecdp::ThresholdSetInstance& ts) {
  int best = 0;
  for (std::uint32_t set = 0; set < (1U << ts.universe_size); ++set) {
    bool ok = true;
    for (std::size_t i = 0; i < ts.sets.size() && ok; ++i) {
      int hit = 0;
      for (auto e : ts.sets[i]) hit += static_cast<int>(set >> e & 1U);
      ok = hit <= ts.weights[i];
    }
    if (ok) best = std::max(best, std::popcount(set));
  }
  return best;
}

}  // namespace reference
