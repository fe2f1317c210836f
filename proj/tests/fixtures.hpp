#pragma once

#include "ecdp/graph.hpp"
#include "ecdp/instance.hpp"
#include "ecdp/source_problems.hpp"

namespace fixtures {

inline constexpr ecdp::Vertex kS = 0;
inline constexpr ecdp::Vertex kV = 1;
inline constexpr ecdp::Vertex kU = 2;
inline constexpr ecdp::Vertex kT = 3;

// s,v,t doubly colored red/green; s,u,t red only.
inline ecdp::ProblemInstance diamond(ecdp::Mode mode = ecdp::Mode::Cddp) {
  ecdp::GraphBuilder b(4);
  b.add_color("red");
  b.add_color("green");
  b.add_edge(kS, kV, {"red", "green"});
  b.add_edge(kV, kT, {"red", "green"});
  b.add_edge(kS, kU, {"red"});
  b.add_edge(kU, kT, {"red"});
  ecdp::ProblemInstance inst;
  inst.graph = b.build();
  inst.source = kS;
  inst.target = kT;
  inst.mode = mode;
  return inst;
}

// Sets {0,1,2}, {0,3}, {1,2,3} with weights 2, 1, 2.
inline ecdp::ThresholdSetInstance threshold_example() {
  ecdp::ThresholdSetInstance ts;
  ts.universe_size = 4;
  ts.sets = {{0, 1, 2}, {0, 3}, {1, 2, 3}};
  ts.weights = {2, 1, 2};
  return ts;
}

inline ecdp::CubicGraph k4() {
  return ecdp::CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline ecdp::ProblemInstance single_edge_instance(int n, std::initializer_list<std::pair<int, int>> edges,
                                                  int s, int t) {
  ecdp::GraphBuilder b(n);
  b.add_color("c");
  for (auto [u, v] : edges) b.add_edge(u, v, {"c"});
  ecdp::ProblemInstance inst;
  inst.graph = b.build();
  inst.source = s;
  inst.target = t;
  return inst;
}

}  // namespace fixtures
