#include "ecdp/matching.hpp"

#include <functional>

namespace ecdp {

Matching maximum_bipartite_matching(const BipartiteGraph& bg) {
  Matching m;
  m.left_mate.assign(static_cast<std::size_t>(bg.left), -1);
  m.right_mate.assign(static_cast<std::size_t>(bg.right), -1);
  std::vector<int> seen(static_cast<std::size_t>(bg.right), -1);

  std::function<bool(int, int)> augment = [&](int u, int round) {
    for (int r : bg.adjacency[u]) {
      if (seen[r] == round) continue;
      seen[r] = round;
      if (m.right_mate[r] == -1 || augment(m.right_mate[r], round)) {
        m.left_mate[u] = r;
        m.right_mate[r] = u;
        return true;
      }
    }
    return false;
  };

  for (int u = 0; u < bg.left; ++u) {
    if (augment(u, u)) ++m.size;
  }
  return m;
}

}  // namespace ecdp
