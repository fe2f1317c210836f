#pragma once

#include <cstddef>
#include <vector>

#include "ecdp/bitset.hpp"
#include "ecdp/instance.hpp"
#include "ecdp/parallel.hpp"
#include "ecdp/source_problems.hpp"

namespace ecdp {

inline constexpr std::size_t kDefaultPathCap = 1'000'000;
inline constexpr int kDefaultBruteForceLimit = 24;

/// All simple uni-color s-t paths of the color c, in DFS order with ascending
/// neighbors. Honors inst.length_bound. Throws OverflowError past `cap` paths.
std::vector<UniColorPath> enumerate_paths_of_color(const ProblemInstance& inst, ColorId c,
                                                   std::size_t cap = kDefaultPathCap);

/// Every simple uni-color s-t path, once per certifying color, grouped by
/// ascending color. The parallel kernel enumerates colors concurrently and
/// concatenates in color order, so both executions return the same list.
std::vector<UniColorPath> enumerate_unicolor_paths(const ProblemInstance& inst,
                                                   std::size_t cap = kDefaultPathCap,
                                                   Execution exec = Execution::Parallel);

/// True when two s-t paths cannot both be in one solution: they share an
/// internal vertex, have the same vertex sequence, or (CDDP) the same color.
bool paths_conflict(const UniColorPath& a, const UniColorPath& b, Mode mode);

class ConflictGraph {
 public:
  ConflictGraph(std::vector<UniColorPath> paths, Mode mode);

  std::size_t size() const { return paths_.size(); }
  const UniColorPath& path(std::size_t i) const { return paths_[i]; }
  const std::vector<UniColorPath>& paths() const { return paths_; }
  bool conflicts(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  const DynamicBitset& row(std::size_t i) const { return rows_[i]; }

 private:
  std::vector<UniColorPath> paths_;
  std::vector<DynamicBitset> rows_;
};

/// Maximum independent set of the conflict graph by branch-and-bound
/// (greedy lower bound, greedy clique-cover upper bound). Among maximum sets
/// the lexicographically smallest index sequence is returned.
std::vector<std::size_t> maximum_independent_set(const ConflictGraph& graph);

struct OracleOptions {
  std::size_t path_cap = kDefaultPathCap;
  Execution execution = Execution::Parallel;
};

/// Exact MaxCDP / MaxCDDP (mode taken from the instance).
PathSolution solve_exact(const ProblemInstance& inst, const OracleOptions& options = {});

/// Maximum independent set by exhaustive branching. Throws InvalidArgument
/// when the graph has more than `limit` vertices.
std::vector<std::int32_t> solve_is_bruteforce(const SimpleGraph& g, int limit = kDefaultBruteForceLimit);

/// Maximum feasible T by a scan over all subsets of the universe.
std::vector<std::int32_t> solve_thresholdset_bruteforce(const ThresholdSetInstance& ts,
                                                        int limit = kDefaultBruteForceLimit);

}  // namespace ecdp
