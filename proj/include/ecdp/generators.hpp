#pragma once

#include <cstdint>

#include "ecdp/instance.hpp"
#include "ecdp/source_problems.hpp"

namespace ecdp {

// Random instance factories. Every generator is a pure function of its
// arguments (std::mt19937_64 seeded with `seed`). Colors are named c0, c1, ...;
// s = 0 and t = n-1 unless stated otherwise.

/// Uniform pairing model, rejecting loops and parallel edges. n even, n >= 4.
CubicGraph gen_random_cubic(std::int32_t n, std::uint64_t seed);

/// Each vertex pair becomes an edge with probability edge_prob and receives
/// between 1 and colors_per_edge distinct colors.
ProblemInstance gen_random_instance(std::int32_t n, std::int32_t q, double edge_prob, int colors_per_edge,
                                    std::uint64_t seed);

/// G minus t is a random tree rooted at s; each other vertex reaches t with
/// probability t_prob. Every edge carries one or two colors.
ProblemInstance gen_tree_instance(std::int32_t n, std::int32_t q, std::uint64_t seed, double t_prob = 0.6);

/// The interior is cut into random induced paths; every interior vertex is
/// joined to s and to t with probability 0.5 each. `extra` of the interior
/// vertices become hubs attached to up to three random others, so the
/// distance to disjoint paths is at most `extra`.
ProblemInstance gen_disjoint_paths_instance(std::int32_t n, std::int32_t q, std::uint64_t seed, int extra = 0);

/// Sets are random nonempty subsets (each element with probability 1/2);
/// weights are uniform in [1, max_w].
ThresholdSetInstance gen_random_ts(std::int32_t universe_size, std::int32_t q, std::int32_t max_w,
                                   std::uint64_t seed);

}  // namespace ecdp
