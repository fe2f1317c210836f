#pragma once

#include <optional>
#include <vector>

#include "ecdp/color_coding.hpp"
#include "ecdp/instance.hpp"

namespace ecdp {

/// Minimum vertex cover of size <= k_max by a bounded search tree (branch on
/// both ends of the first uncovered edge), deepened one level at a time.
std::optional<std::vector<std::int32_t>> minimum_vertex_cover(const SimpleGraph& g, int k_max);

/// Every edge of the graph, colors dropped.
SimpleGraph underlying_graph(const EdgeColoredGraph& g);

/// Maximal set of two-edge uni-color paths s,v,t: vertices ascending, then
/// colors in declaration order. CDDP skips colors already used.
PathSolution greedy_length3(const ProblemInstance& inst, Mode mode);

struct VcOptions {
  /// Labelings for the residual DP; unset picks injective labels when they
  /// fit and random ones otherwise.
  std::optional<LabelingStrategy> strategy;
  Execution execution = Execution::Parallel;
};

/// What the exact solver did before the color-coding stage.
struct VcDecomposition {
  PathSolution prefix;         // direct edge and greedy paths
  ProblemInstance residual;    // greedy vertices removed, no direct edge
  std::vector<Vertex> cover;   // minimum vertex cover of the whole residual graph
  int k = 0;
  int residual_length = 0;     // bound handed to the DP, 2k (or less with a bound)
};

struct VcResult {
  PathSolution solution;
  VcDecomposition decomposition;
};

VcDecomposition decompose_for_vc(const ProblemInstance& inst);

/// Exact MaxCDP through the vertex-cover decomposition plus color coding.
VcResult solve_cdp_vc(const ProblemInstance& inst, const VcOptions& options = {});

/// Step 1 removes the internal vertices of `approx_a` and its colors; step 2
/// keeps only interior vertices lying on a simple uni-color s-t path of a
/// remaining color. Returns a CDDP instance.
ProblemInstance build_H(const ProblemInstance& inst, const PathSolution& approx_a);

struct ApproxResult {
  PathSolution solution;
  PathSolution greedy;       // APPROX_A of the kept branch
  std::optional<ColorId> direct_color;  // color of the direct edge, when used
  int h_cover = 0;           // vertex cover size of H
  std::size_t h_value = 0;   // paths found in H
};

/// Half-approximation for MaxCDDP. The direct {s,t} edge is tried unused and
/// with each of its colors; the best outcome is kept.
ApproxResult approx_cddp_vc(const ProblemInstance& inst, const VcOptions& options = {});

}  // namespace ecdp
