#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ecdp/instance.hpp"
#include "ecdp/matching.hpp"

namespace ecdp {

/// Bipartite graph between the neighbors of s and the colors. Left vertex i is
/// left[i], or kNoVertex for the direct {s,t} edge when it exists.
struct TreeMatchingGraph {
  std::vector<Vertex> left;
  std::vector<ColorId> right;  // colors used by at least one edge
  BipartiteGraph graph;
  /// (left index, right index) -> the uni-color s-t path backing that edge
  std::map<std::pair<int, int>, std::vector<Vertex>> witness;
};

/// True when the graph without t has no cycle (s's component is then a tree).
bool target_removal_leaves_forest(const ProblemInstance& inst);

/// Throws PreconditionError when G minus t has a cycle.
TreeMatchingGraph build_tree_matching_graph(const ProblemInstance& inst);

/// Optimal color-disjoint solution when G minus t is a tree (a forest is also
/// accepted; only the component of s matters). Honors the length bound.
PathSolution solve_tree_cddp(const ProblemInstance& inst);

}  // namespace ecdp
