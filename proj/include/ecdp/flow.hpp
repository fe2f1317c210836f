#pragma once

#include <vector>

#include "ecdp/instance.hpp"
#include "ecdp/parallel.hpp"

namespace ecdp {

/// Integer-capacity directed network solved with BFS augmenting paths.
/// Sized for unit-capacity problems on desk-scale graphs.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes);

  /// Adds an arc and returns its id; the reverse residual arc is id ^ 1.
  int add_arc(int from, int to, int capacity);

  /// Pushes flow from source to sink until no augmenting path is left or
  /// `limit` units were sent. Returns the amount sent by this call.
  int max_flow(int source, int sink, int limit = 1 << 30);

  int flow(int arc) const { return arcs_[arc].flow; }
  int head(int arc) const { return arcs_[arc].to; }
  int tail(int arc) const { return arcs_[arc ^ 1].to; }
  void set_flow(int arc, int value);
  const std::vector<int>& out_arcs(int node) const { return out_[node]; }
  int node_count() const { return static_cast<int>(out_.size()); }

 private:
  struct Arc {
    int to;
    int capacity;
    int flow;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

/// Maximum set of internally vertex-disjoint s-t paths in an undirected graph
/// given by neighbor lists (vertex splitting, unit capacities). A direct s-t
/// edge yields the path {s, t} at most once.
std::vector<std::vector<Vertex>> vertex_disjoint_paths(const std::vector<std::vector<Vertex>>& adj,
                                                       Vertex s, Vertex t);

/// True iff a simple s-t path through v exists (two disjoint paths v->s, v->t).
bool on_simple_path(const std::vector<std::vector<Vertex>>& adj, Vertex s, Vertex v, Vertex t);

/// Max set of disjoint uni-color paths of color c. Unbounded instances only.
PathSolution solve_single_color_flow(const ProblemInstance& inst, ColorId c);

/// Flow value of every color, in color order.
std::vector<int> per_color_flow_values(const ProblemInstance& inst, Execution exec = Execution::Parallel);

/// Best single-color flow solution; in CDDP mode a single path of that color.
/// Ties go to the smallest color index.
PathSolution per_color_heuristic(const ProblemInstance& inst, Execution exec = Execution::Parallel);

}  // namespace ecdp
