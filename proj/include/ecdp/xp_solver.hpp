#pragma once

#include <optional>
#include <vector>

#include "ecdp/instance.hpp"
#include "ecdp/parallel.hpp"

namespace ecdp {

/// X together with the induced paths left after deleting X, s and t.
struct DeletionSet {
  std::vector<Vertex> vertices;  // ascending
  std::vector<std::vector<Vertex>> interior_paths;
};

/// Smallest X (|X| <= d_max, s and t never in X) whose removal together with
/// s and t leaves disjoint paths. Subsets are tried by size, then
/// lexicographically. std::nullopt when no such set exists.
std::optional<DeletionSet> find_deletion_set(const ProblemInstance& inst, int d_max);

/// Orders and orients the pieces (single X vertices or interior ranges, each
/// a vertex sequence) between s and t so that every edge carries one common
/// color. Colors are tried in order, then piece order and
/// orientations, depth first. Honors the length bound.
std::optional<UniColorPath> assemble_unicolor_path(const ProblemInstance& inst,
                                                   const std::vector<std::vector<Vertex>>& pieces);

struct XpStats {
  std::size_t single_guesses = 0;    // piece assignments tried
  std::size_t accepted_guesses = 0;  // distinct vertex sets that assemble
  std::size_t combinations = 0;      // disjoint guess combinations solved
};

/// Exact MaxCDP by guessing the solution paths that meet X and solving the
/// rest with the disjoint-paths solver. Throws PreconditionError if X is not
/// a valid deletion set or the instance is in CDDP mode.
PathSolution solve_xp_cdp(const ProblemInstance& inst, const DeletionSet& x,
                          Execution exec = Execution::Parallel, XpStats* stats = nullptr);

/// find_deletion_set followed by solve_xp_cdp; PreconditionError when no set
/// of size <= d_max exists.
PathSolution solve_xp_cdp(const ProblemInstance& inst, int d_max, Execution exec = Execution::Parallel,
                          XpStats* stats = nullptr);

}  // namespace ecdp
