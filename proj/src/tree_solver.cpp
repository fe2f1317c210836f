#include "ecdp/tree_solver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace ecdp {

bool target_removal_leaves_forest(const ProblemInstance& inst) {
  const auto& g = inst.graph;
  std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges()) {
    if (e.u == inst.target || e.v == inst.target) continue;
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

TreeMatchingGraph build_tree_matching_graph(const ProblemInstance& inst) {
  if (!target_removal_leaves_forest(inst)) {
    throw PreconditionError("G minus t is not a tree containing s");
  }
  const auto& g = inst.graph;
  const Vertex s = inst.source;
  const Vertex t = inst.target;
  const int n = g.vertex_count();
  const std::size_t max_edges = inst.length_bound ? static_cast<std::size_t>(*inst.length_bound)
                                                  : static_cast<std::size_t>(n);

  TreeMatchingGraph tm;
  std::vector<char> used(static_cast<std::size_t>(g.color_count()), 0);
  for (const Edge& e : g.edges()) {
    for (ColorId c : e.colors) used[c] = 1;
  }
  std::vector<int> right_index(static_cast<std::size_t>(g.color_count()), -1);
  for (ColorId c = 0; c < g.color_count(); ++c) {
    if (used[c]) {
      right_index[c] = static_cast<int>(tm.right.size());
      tm.right.push_back(c);
    }
  }

  for (const Incidence& inc : g.incident(s)) {
    if (inc.other != t) tm.left.push_back(inc.other);
  }
  std::sort(tm.left.begin(), tm.left.end());
  if (g.has_edge(s, t)) tm.left.push_back(kNoVertex);

  tm.graph.left = static_cast<int>(tm.left.size());
  tm.graph.right = static_cast<int>(tm.right.size());
  tm.graph.adjacency.resize(tm.left.size());

  std::vector<Vertex> pred(static_cast<std::size_t>(n), kNoVertex);
  std::vector<std::size_t> depth(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < tm.graph.left; ++i) {
    const Vertex y = tm.left[i];
    if (y == kNoVertex) {
      for (ColorId c : *g.colors_between(s, t)) {
        tm.graph.adjacency[i].push_back(right_index[c]);
        tm.witness[{i, right_index[c]}] = {s, t};
      }
      continue;
    }
    for (ColorId c : *g.colors_between(s, y)) {
      // Shallowest c-colored descent from y that can close to t.
      std::fill(pred.begin(), pred.end(), kNoVertex);
      std::queue<Vertex> bfs;
      bfs.push(y);
      pred[y] = s;
      depth[y] = 1;
      Vertex hit = kNoVertex;
      while (!bfs.empty()) {
        const Vertex w = bfs.front();
        bfs.pop();
        if (depth[w] + 1 > max_edges) break;
        if (g.has_color(w, t, c)) {
          hit = w;
          break;
        }
        for (const Incidence& inc : g.incident(w)) {
          const Vertex x = inc.other;
          if (x == t || x == s || pred[x] != kNoVertex) continue;
          if (!g.edges()[inc.edge].colors.contains(c)) continue;
          pred[x] = w;
          depth[x] = depth[w] + 1;
          bfs.push(x);
        }
      }
      if (hit == kNoVertex) continue;
      std::vector<Vertex> path{t};
      for (Vertex w = hit; w != s; w = pred[w]) path.push_back(w);
      path.push_back(s);
      std::reverse(path.begin(), path.end());
      tm.graph.adjacency[i].push_back(right_index[c]);
      tm.witness[{i, right_index[c]}] = std::move(path);
    }
    std::sort(tm.graph.adjacency[i].begin(), tm.graph.adjacency[i].end());
  }
  return tm;
}

PathSolution solve_tree_cddp(const ProblemInstance& inst) {
  const TreeMatchingGraph tm = build_tree_matching_graph(inst);
  const Matching m = maximum_bipartite_matching(tm.graph);
  PathSolution sol;
  sol.mode = inst.mode;
  for (int i = 0; i < tm.graph.left; ++i) {
    const int r = m.left_mate[i];
    if (r >= 0) sol.paths.push_back({tm.witness.at({i, r}), tm.right[r]});
  }
  return sol;
}

}  // namespace ecdp
