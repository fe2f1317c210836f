#include "ecdp/graph.hpp"

#include <algorithm>
#include <set>

namespace ecdp {

std::string_view to_string(Mode mode) { return mode == Mode::Cdp ? "cdp" : "cddp"; }

Mode parse_mode(std::string_view text) {
  if (text == "cdp" || text == "CDP") return Mode::Cdp;
  if (text == "cddp" || text == "CDDP") return Mode::Cddp;
  throw InvalidArgument("unknown mode '" + std::string(text) + "' (expected cdp or cddp)");
}

// ---------------------------------------------------------------- ColorSet

ColorSet::ColorSet(std::initializer_list<ColorId> colors) : ColorSet(std::vector<ColorId>(colors)) {}

ColorSet::ColorSet(std::vector<ColorId> colors) : colors_(std::move(colors)) {
  std::sort(colors_.begin(), colors_.end());
  colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
}

bool ColorSet::contains(ColorId c) const {
  return std::binary_search(colors_.begin(), colors_.end(), c);
}

void ColorSet::insert(ColorId c) {
  auto it = std::lower_bound(colors_.begin(), colors_.end(), c);
  if (it == colors_.end() || *it != c) colors_.insert(it, c);
}

void ColorSet::erase(ColorId c) {
  auto it = std::lower_bound(colors_.begin(), colors_.end(), c);
  if (it != colors_.end() && *it == c) colors_.erase(it);
}

// ---------------------------------------------------------- EdgeColoredGraph

std::uint64_t EdgeColoredGraph::key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

EdgeColoredGraph::EdgeColoredGraph(std::int32_t vertex_count, std::vector<std::string> colors,
                                   std::vector<Edge> edges)
    : vertex_count_(std::max<std::int32_t>(vertex_count, 0)),
      colors_(std::move(colors)),
      edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::stable_sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  adjacency_.assign(static_cast<std::size_t>(vertex_count_), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!valid_vertex(e.u) || !valid_vertex(e.v) || e.u == e.v) continue;
    // Only the first record of a duplicated pair is wired into the adjacency.
    if (!lookup_.emplace(key(e.u, e.v), static_cast<std::int32_t>(i)).second) continue;
    adjacency_[e.u].push_back({e.v, static_cast<std::int32_t>(i)});
    adjacency_[e.v].push_back({e.u, static_cast<std::int32_t>(i)});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.other < b.other; });
  }
}

const std::string& EdgeColoredGraph::color_name(ColorId c) const {
  if (c < 0 || c >= color_count()) throw InvalidArgument("color index out of range");
  return colors_[static_cast<std::size_t>(c)];
}

std::optional<ColorId> EdgeColoredGraph::find_color(std::string_view name) const {
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] == name) return static_cast<ColorId>(i);
  }
  return std::nullopt;
}

std::span<const Incidence> EdgeColoredGraph::incident(Vertex v) const {
  if (!valid_vertex(v)) return {};
  return adjacency_[static_cast<std::size_t>(v)];
}

const ColorSet* EdgeColoredGraph::colors_between(Vertex u, Vertex v) const {
  auto it = lookup_.find(key(u, v));
  if (it == lookup_.end()) return nullptr;
  return &edges_[static_cast<std::size_t>(it->second)].colors;
}

bool EdgeColoredGraph::has_color(Vertex u, Vertex v, ColorId c) const {
  const ColorSet* cs = colors_between(u, v);
  return cs != nullptr && cs->contains(c);
}

std::vector<std::vector<Vertex>> EdgeColoredGraph::color_adjacency(ColorId c) const {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(vertex_count_));
  for (Vertex v = 0; v < vertex_count_; ++v) {
    for (const Incidence& inc : adjacency_[v]) {
      if (edges_[static_cast<std::size_t>(inc.edge)].colors.contains(c)) adj[v].push_back(inc.other);
    }
  }
  return adj;
}

// --------------------------------------------------------------- GraphBuilder

GraphBuilder::GraphBuilder(std::int32_t vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw InvalidArgument("vertex count must be nonnegative");
}

ColorId GraphBuilder::add_color(std::string name) {
  if (name.empty()) throw InvalidArgument("empty color name");
  const auto id = static_cast<ColorId>(colors_.size());
  if (!color_index_.emplace(name, id).second) {
    throw InvalidArgument("duplicate color '" + name + "'");
  }
  colors_.push_back(std::move(name));
  return id;
}

ColorId GraphBuilder::color(std::string_view name) const {
  auto it = color_index_.find(std::string(name));
  if (it == color_index_.end()) throw InvalidArgument("unknown color '" + std::string(name) + "'");
  return it->second;
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v, const ColorSet& colors) {
  if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) {
    throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} has an out-of-range endpoint");
  }
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (colors.empty()) throw InvalidArgument("edge with empty color set");
  for (ColorId c : colors) {
    if (c < 0 || c >= static_cast<ColorId>(colors_.size())) throw InvalidArgument("unknown color");
  }
  if (u > v) std::swap(u, v);
  const std::uint64_t k = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  auto [it, inserted] = edge_index_.emplace(k, edges_.size());
  if (inserted) {
    edges_.push_back({u, v, colors});
  } else {
    for (ColorId c : colors) edges_[it->second].colors.insert(c);
  }
  return *this;
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v,
                                     std::initializer_list<std::string_view> names) {
  std::vector<ColorId> ids;
  for (auto n : names) ids.push_back(color(n));
  return add_edge(u, v, ColorSet(std::move(ids)));
}

EdgeColoredGraph GraphBuilder::build() const {
  EdgeColoredGraph g(vertex_count_, colors_, edges_);
  auto issues = validate_graph(g);
  if (!issues.empty()) throw InvalidArgument(issues.front());
  return g;
}

// ----------------------------------------------------------- free functions

std::vector<std::string> validate_graph(const EdgeColoredGraph& g) {
  std::vector<std::string> issues;
  std::set<std::string> names;
  for (const auto& name : g.color_names()) {
    if (!names.insert(name).second) issues.push_back("duplicate color '" + name + "'");
  }
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : g.edges()) {
    const std::string label = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
    if (!g.valid_vertex(e.u) || !g.valid_vertex(e.v)) {
      issues.push_back(label + ": vertex out of range");
      continue;
    }
    if (e.u == e.v) issues.push_back(label + ": self-loop");
    if (!seen.emplace(e.u, e.v).second) issues.push_back(label + ": duplicate edge");
    if (e.colors.empty()) issues.push_back(label + ": empty color set");
    for (ColorId c : e.colors) {
      if (c < 0 || c >= g.color_count()) {
        issues.push_back(label + ": unknown color " + std::to_string(c));
      }
    }
  }
  return issues;
}

EdgeColoredGraph remove_vertices(const EdgeColoredGraph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : removed) {
    if (!g.valid_vertex(v)) throw InvalidArgument("remove_vertices: invalid vertex " + std::to_string(v));
    gone[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!gone[static_cast<std::size_t>(e.u)] && !gone[static_cast<std::size_t>(e.v)]) kept.push_back(e);
  }
  return EdgeColoredGraph(g.vertex_count(), g.color_names(), std::move(kept));
}

EdgeColoredGraph restrict_colors(const EdgeColoredGraph& g, std::span<const ColorId> dropped) {
  for (ColorId c : dropped) {
    if (c < 0 || c >= g.color_count()) throw InvalidArgument("restrict_colors: invalid color");
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    Edge copy = e;
    for (ColorId c : dropped) copy.colors.erase(c);
    if (!copy.colors.empty()) kept.push_back(std::move(copy));
  }
  return EdgeColoredGraph(g.vertex_count(), g.color_names(), std::move(kept));
}

std::vector<std::vector<std::int32_t>> SimpleGraph::adjacency() const {
  std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(vertex_count));
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& l : adj) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return adj;
}

}  // namespace ecdp
