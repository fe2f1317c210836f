#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ecdp/types.hpp"

namespace ecdp {

/// Sorted, duplicate-free set of dense color indices attached to one edge.
class ColorSet {
 public:
  ColorSet() = default;
  ColorSet(std::initializer_list<ColorId> colors);
  explicit ColorSet(std::vector<ColorId> colors);

  bool contains(ColorId c) const;
  bool empty() const { return colors_.empty(); }
  std::size_t size() const { return colors_.size(); }
  auto begin() const { return colors_.begin(); }
  auto end() const { return colors_.end(); }
  ColorId front() const { return colors_.front(); }
  const std::vector<ColorId>& ids() const { return colors_; }

  void insert(ColorId c);
  void erase(ColorId c);

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  std::vector<ColorId> colors_;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  ColorSet colors;
};

struct Incidence {
  Vertex other;
  std::int32_t edge;
};

/// Undirected graph G = (V, E, f_C) whose edges carry nonempty color sets.
///
/// Vertices are 0..n-1. Colors are opaque names mapped to dense indices in
/// declaration order. The raw constructor stores its input without checking
/// the invariants so that malformed data can be reported by validate_graph();
/// GraphBuilder is the checked way to construct one.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph() = default;
  EdgeColoredGraph(std::int32_t vertex_count, std::vector<std::string> colors,
                   std::vector<Edge> edges);

  std::int32_t vertex_count() const { return vertex_count_; }
  std::int32_t color_count() const { return static_cast<std::int32_t>(colors_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& color_names() const { return colors_; }
  const std::string& color_name(ColorId c) const;
  std::optional<ColorId> find_color(std::string_view name) const;

  /// Edges with u < v, sorted lexicographically by (u, v).
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(Vertex v) const;
  std::int32_t degree(Vertex v) const { return static_cast<std::int32_t>(incident(v).size()); }

  /// Color set of the edge {u, v}, or nullptr when absent.
  const ColorSet* colors_between(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return colors_between(u, v) != nullptr; }
  bool has_color(Vertex u, Vertex v, ColorId c) const;

  /// Neighbor lists (ascending) of the subgraph formed by the edges carrying c.
  std::vector<std::vector<Vertex>> color_adjacency(ColorId c) const;

  bool valid_vertex(Vertex v) const { return v >= 0 && v < vertex_count_; }

 private:
  static std::uint64_t key(Vertex u, Vertex v);

  std::int32_t vertex_count_ = 0;
  std::vector<std::string> colors_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::uint64_t, std::int32_t> lookup_;
};

/// Checked incremental construction. Adding an edge twice unions its colors.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::int32_t vertex_count);

  ColorId add_color(std::string name);
  ColorId color(std::string_view name) const;

  GraphBuilder& add_edge(Vertex u, Vertex v, const ColorSet& colors);
  GraphBuilder& add_edge(Vertex u, Vertex v, std::initializer_list<std::string_view> names);

  /// Throws InvalidArgument if any graph invariant is violated.
  EdgeColoredGraph build() const;

 private:
  std::int32_t vertex_count_;
  std::vector<std::string> colors_;
  std::unordered_map<std::string, ColorId> color_index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> edge_index_;
};

/// Human-readable violations of the graph invariants; empty when valid.
std::vector<std::string> validate_graph(const EdgeColoredGraph& g);

/// Drops every edge incident to a vertex in `removed`. Vertex indices are kept,
/// so removed vertices remain as isolated vertices.
EdgeColoredGraph remove_vertices(const EdgeColoredGraph& g, std::span<const Vertex> removed);

/// Deletes the listed colors from every edge's color set and drops edges whose
/// set becomes empty. The color list itself is unchanged so indices stay stable.
EdgeColoredGraph restrict_colors(const EdgeColoredGraph& g, std::span<const ColorId> dropped);

/// Plain undirected graph used by the source problems (independent set, vertex cover).
struct SimpleGraph {
  std::int32_t vertex_count = 0;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;

  std::vector<std::vector<std::int32_t>> adjacency() const;
};

}  // namespace ecdp
