#pragma once

#include <vector>

namespace ecdp {

struct BipartiteGraph {
  int left = 0;
  int right = 0;
  /// adjacency[i] lists the right vertices of left vertex i, ascending.
  std::vector<std::vector<int>> adjacency;
};

struct Matching {
  std::vector<int> left_mate;   // right index or -1
  std::vector<int> right_mate;  // left index or -1
  int size = 0;
};

/// Maximum-cardinality matching by augmenting paths (Kuhn), left vertices in
/// ascending order.
Matching maximum_bipartite_matching(const BipartiteGraph& bg);

}  // namespace ecdp
