#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecdp/graph.hpp"

namespace ecdp {

struct ProblemInstance {
  EdgeColoredGraph graph;
  Vertex source = 0;
  Vertex target = 0;
  /// Maximum number of edges per path (l), when the bounded variant is asked for.
  std::optional<int> length_bound;
  Mode mode = Mode::Cdp;
};

/// An s-t path together with the single color certifying it.
struct UniColorPath {
  std::vector<Vertex> vertices;
  ColorId color = 0;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  /// Vertices strictly between the two endpoints.
  std::span<const Vertex> internal() const;

  friend bool operator==(const UniColorPath&, const UniColorPath&) = default;
  friend auto operator<=>(const UniColorPath& a, const UniColorPath& b) {
    if (auto c = a.vertices <=> b.vertices; c != 0) return c;
    return a.color <=> b.color;
  }
};

struct PathSolution {
  std::vector<UniColorPath> paths;
  Mode mode = Mode::Cdp;

  std::size_t size() const { return paths.size(); }
  void append(const PathSolution& other);
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool valid() const { return violations.empty(); }
  explicit operator bool() const { return valid(); }
  std::string summary() const;
};

ValidationReport validate_instance(const ProblemInstance& inst);

/// Checks every solution invariant: uni-color edges, endpoints, simplicity,
/// internal disjointness, color distinctness (CDDP) and the length bound.
/// The same vertex sequence may not be used twice, which matters only for a
/// direct {s,t} edge carrying several colors.
ValidationReport validate_solution(const ProblemInstance& inst, const PathSolution& sol);

/// Vertices other than source and target, ascending.
std::vector<Vertex> interior_vertices(const ProblemInstance& inst);

/// Copy of `inst` with a different graph.
ProblemInstance with_graph(const ProblemInstance& inst, EdgeColoredGraph graph);

/// Copy of `inst` without the direct {s,t} edge (no-op when absent).
ProblemInstance without_direct_edge(const ProblemInstance& inst);

}  // namespace ecdp
