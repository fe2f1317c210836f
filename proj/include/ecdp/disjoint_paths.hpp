#pragma once

#include <span>
#include <vector>

#include "ecdp/instance.hpp"

namespace ecdp {

/// True iff the subgraph induced by the vertices not in `excluded` has maximum
/// degree 2 and no cycle.
bool is_disjoint_paths(const EdgeColoredGraph& g, std::span<const Vertex> excluded = {});

/// Components of the induced subgraph as vertex sequences. Each starts at its
/// smaller-index endpoint; components are ordered by that vertex. Requires
/// is_disjoint_paths.
std::vector<std::vector<Vertex>> induced_paths(const EdgeColoredGraph& g, std::span<const Vertex> excluded = {});

enum class IntervalRule {
  EarliestEnd,    // interval scheduling by right end; optimal
  ShortestFirst,  // repeatedly take a shortest candidate; can be suboptimal
};

/// A uni-color path using the contiguous block seq[first..last] of an induced
/// path, entered from s at seq[first] (or seq[last] when reversed).
struct IntervalPath {
  std::size_t component = 0;
  std::size_t first = 0;
  std::size_t last = 0;
  bool reversed = false;
  ColorId color = 0;
};

/// Every interval path of one induced path component that respects the bound.
std::vector<IntervalPath> interval_candidates(const ProblemInstance& inst, const std::vector<Vertex>& seq,
                                              std::size_t component = 0);

/// MaxCDP when V minus {s,t} induces disjoint paths. Throws PreconditionError
/// if the interior is not of that shape or the instance is in CDDP mode.
PathSolution solve_disjoint_paths_cdp(const ProblemInstance& inst, IntervalRule rule = IntervalRule::EarliestEnd);

}  // namespace ecdp
