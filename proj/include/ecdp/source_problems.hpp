#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ecdp/graph.hpp"

namespace ecdp {

/// 3-regular simple graph. Neighbor lists are ascending; the position of a
/// neighbor in that list is what the gadget construction calls its rank.
class CubicGraph {
 public:
  /// Throws InvalidArgument unless the edge list describes a simple 3-regular graph.
  CubicGraph(std::int32_t vertex_count, std::vector<std::pair<std::int32_t, std::int32_t>> edges);

  std::int32_t vertex_count() const { return vertex_count_; }
  /// Edges with u < v, sorted.
  const std::vector<std::pair<std::int32_t, std::int32_t>>& edges() const { return edges_; }
  const std::vector<std::int32_t>& neighbors(std::int32_t v) const { return neighbors_[v]; }
  /// 0-based position of `neighbor` in the ascending neighbor list of v.
  int rank(std::int32_t v, std::int32_t neighbor) const;
  bool adjacent(std::int32_t u, std::int32_t v) const;

  SimpleGraph as_simple() const { return {vertex_count_, edges_}; }

 private:
  std::int32_t vertex_count_;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges_;
  std::vector<std::vector<std::int32_t>> neighbors_;
};

/// Threshold Set: universe {0..universe_size-1}, ordered sets S_0..S_{q-1}
/// with weights w(S_i). A feasible T satisfies |T ∩ S_i| <= w(S_i) for all i.
struct ThresholdSetInstance {
  std::int32_t universe_size = 0;
  std::vector<std::vector<std::int32_t>> sets;  // each ascending, duplicate-free
  std::vector<std::int32_t> weights;
};

/// Throws InvalidArgument on out-of-range elements, unsorted or duplicated set
/// members, mismatched weight count, or negative weights.
void check_threshold_set(const ThresholdSetInstance& ts);

bool is_feasible_threshold_set(const ThresholdSetInstance& ts, const std::vector<std::int32_t>& chosen);

/// Elements that belong to no set.
std::vector<std::int32_t> uncovered_elements(const ThresholdSetInstance& ts);

/// Appends a private set {i} with weight 1 for every uncovered element i.
/// The optimum is unchanged: such an element is always addable to T.
ThresholdSetInstance cover_uncovered_elements(const ThresholdSetInstance& ts);

// Text formats for the source problems.
//
//   cubic graph:   n <count>        threshold set:  u <universe_size>
//                  e <u> <v>                        set <weight> <elem> <elem> ...
CubicGraph parse_cubic_graph(std::string_view text);
std::string serialize_cubic_graph(const CubicGraph& g);
ThresholdSetInstance parse_threshold_set(std::string_view text);
std::string serialize_threshold_set(const ThresholdSetInstance& ts);

}  // namespace ecdp
