#pragma once

#include <string>
#include <vector>

#include "ecdp/instance.hpp"
#include "ecdp/source_problems.hpp"

namespace ecdp {

/// Names every vertex and color of a reduced instance after the source
/// object it stands for.
struct ReductionCertificate {
  std::string source_digest;
  std::vector<std::string> vertex_names;
  std::vector<std::string> color_names;
};

struct Reduction {
  ProblemInstance instance;
  ReductionCertificate certificate;
};

// Independent Set on cubic graphs -> MaxCDDP.
//
// s = 0, t = 4n+1. Vertex i owns the gadget v'_i = 1+4i followed by its three
// ports v'_{i,p} = 2+4i+p, p = 0..2, where p is the rank of the neighbor in
// the ascending neighbor list. Colors: c_i for every vertex, then one color
// per edge in sorted edge order.
namespace isc {
inline Vertex source() { return 0; }
inline Vertex target(std::int32_t n) { return 4 * n + 1; }
inline Vertex head(std::int32_t i) { return 1 + 4 * i; }
inline Vertex port(std::int32_t i, int p) { return 2 + 4 * i + p; }
}  // namespace isc

Reduction reduce_isc_to_cddp(const CubicGraph& g);

/// |E| + |set| color-disjoint paths. Throws InvalidArgument unless `set` is
/// independent in g.
PathSolution lift_is_to_paths(const CubicGraph& g, const std::vector<std::int32_t>& set);

/// Independent set of size >= |sol| - |E| read off a feasible solution on the
/// reduced instance, after swapping in one path per edge color. Throws
/// InvalidArgument if sol is infeasible or has fewer than |E| paths.
std::vector<std::int32_t> project_paths_to_is(const CubicGraph& g, const PathSolution& sol);

// Threshold Set -> MaxCDP.
//
// s = 0, s_i = 1+i per element, then the slots S_q^j set by set, t last.
// Color c_i per element.
Reduction reduce_ts_to_cdp(const ThresholdSetInstance& ts);

/// Vertex of slot j (0-based) of set q in the reduced instance.
Vertex ts_slot_vertex(const ThresholdSetInstance& ts, std::size_t q, std::int32_t j);

/// One path per element of a feasible T. An element keeps the slot index it
/// used in the previous set when that slot is free, otherwise it takes the
/// lowest free slot. Throws InvalidArgument if T is infeasible.
PathSolution lift_ts_solution(const ThresholdSetInstance& ts, const std::vector<std::int32_t>& chosen);

/// Elements whose color certifies a path. Throws InvalidArgument if sol is
/// infeasible on the reduced instance.
std::vector<std::int32_t> project_paths_to_ts(const ThresholdSetInstance& ts, const PathSolution& sol);

}  // namespace ecdp
