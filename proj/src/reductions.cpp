#include "ecdp/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ecdp/ecg_io.hpp"

namespace ecdp {

namespace {

std::int32_t edge_color(const CubicGraph& g, std::int32_t a, std::int32_t b) {
  if (a > b) std::swap(a, b);
  const auto& edges = g.edges();
  const auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
  if (it == edges.end() || *it != std::make_pair(a, b)) throw InvalidArgument("not an edge");
  return g.vertex_count() + static_cast<std::int32_t>(it - edges.begin());
}

}  // namespace

Reduction reduce_isc_to_cddp(const CubicGraph& g) {
  const std::int32_t n = g.vertex_count();
  const Vertex s = isc::source();
  const Vertex t = isc::target(n);
  GraphBuilder b(4 * n + 2);
  Reduction r;
  r.certificate.source_digest = content_digest(serialize_cubic_graph(g));
  r.certificate.vertex_names.assign(static_cast<std::size_t>(4 * n + 2), "");
  r.certificate.vertex_names[s] = "s";
  r.certificate.vertex_names[t] = "t";

  for (std::int32_t i = 0; i < n; ++i) b.add_color("c" + std::to_string(i));
  for (auto [u, v] : g.edges()) b.add_color("c" + std::to_string(u) + "_" + std::to_string(v));

  for (std::int32_t i = 0; i < n; ++i) {
    r.certificate.vertex_names[isc::head(i)] = "v" + std::to_string(i);
    const ColorSet own{i};
    b.add_edge(s, isc::head(i), own);
    b.add_edge(isc::head(i), isc::port(i, 0), own);
    b.add_edge(isc::port(i, 0), isc::port(i, 1), own);
    b.add_edge(isc::port(i, 1), isc::port(i, 2), own);
    b.add_edge(isc::port(i, 2), t, own);
    for (int p = 0; p < 3; ++p) {
      const std::int32_t j = g.neighbors(i)[p];
      r.certificate.vertex_names[isc::port(i, p)] = "v" + std::to_string(i) + "_" + std::to_string(j);
      const ColorSet shared{edge_color(g, i, j)};
      b.add_edge(s, isc::port(i, p), shared);
      b.add_edge(isc::port(i, p), t, shared);
    }
  }
  r.instance.graph = b.build();
  r.instance.source = s;
  r.instance.target = t;
  r.instance.mode = Mode::Cddp;
  r.certificate.color_names = r.instance.graph.color_names();
  return r;
}

namespace {

UniColorPath long_path(std::int32_t n, std::int32_t i) {
  return {{isc::source(), isc::head(i), isc::port(i, 0), isc::port(i, 1), isc::port(i, 2), isc::target(n)}, i};
}

UniColorPath short_path(const CubicGraph& g, std::int32_t via, std::int32_t other) {
  return {{isc::source(), isc::port(via, g.rank(via, other)), isc::target(g.vertex_count())},
          edge_color(g, via, other)};
}

}  // namespace

PathSolution lift_is_to_paths(const CubicGraph& g, const std::vector<std::int32_t>& set) {
  const std::int32_t n = g.vertex_count();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (auto v : set) {
    if (v < 0 || v >= n || in[v]) throw InvalidArgument("independent set has an invalid or repeated vertex");
    in[v] = 1;
  }
  for (auto [u, v] : g.edges()) {
    if (in[u] && in[v]) throw InvalidArgument("vertex set is not independent");
  }
  PathSolution sol;
  sol.mode = Mode::Cddp;
  for (std::int32_t i = 0; i < n; ++i) {
    if (in[i]) sol.paths.push_back(long_path(n, i));
  }
  for (auto [u, v] : g.edges()) sol.paths.push_back(in[u] ? short_path(g, v, u) : short_path(g, u, v));
  return sol;
}

std::vector<std::int32_t> project_paths_to_is(const CubicGraph& g, const PathSolution& sol) {
  const Reduction red = reduce_isc_to_cddp(g);
  const auto report = validate_solution(red.instance, sol);
  if (!report) throw InvalidArgument("solution is infeasible on the reduced instance: " + report.summary());
  if (sol.size() < g.edges().size()) {
    throw InvalidArgument("solution has fewer paths than the source graph has edges");
  }
  const std::int32_t n = g.vertex_count();
  std::vector<char> has_long(static_cast<std::size_t>(n), 0);
  std::set<ColorId> used;
  for (const auto& p : sol.paths) {
    used.insert(p.color);
    if (p.color < n) has_long[p.color] = 1;
  }
  for (auto [u, v] : g.edges()) {
    if (used.count(edge_color(g, u, v))) continue;
    // Swap a long path for the short one through its own gadget; otherwise
    // the port of u is unused and the short path can simply be added.
    if (has_long[u]) {
      has_long[u] = 0;
    } else if (has_long[v]) {
      has_long[v] = 0;
    }
    used.insert(edge_color(g, u, v));
  }
  std::vector<std::int32_t> out;
  for (std::int32_t i = 0; i < n; ++i) {
    if (has_long[i]) out.push_back(i);
  }
  return out;
}

// ------------------------------------------------------------ threshold set

Vertex ts_slot_vertex(const ThresholdSetInstance& ts, std::size_t q, std::int32_t j) {
  Vertex v = 1 + ts.universe_size;
  for (std::size_t i = 0; i < q; ++i) v += ts.weights[i];
  return v + j;
}

namespace {

std::vector<std::size_t> sets_containing(const ThresholdSetInstance& ts, std::int32_t e) {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < ts.sets.size(); ++q) {
    if (std::binary_search(ts.sets[q].begin(), ts.sets[q].end(), e)) out.push_back(q);
  }
  return out;
}

Vertex ts_target(const ThresholdSetInstance& ts) { return ts_slot_vertex(ts, ts.sets.size(), 0); }

}  // namespace

Reduction reduce_ts_to_cdp(const ThresholdSetInstance& ts) {
  check_threshold_set(ts);
  if (const auto missing = uncovered_elements(ts); !missing.empty()) {
    throw InvalidArgument("element " + std::to_string(missing.front()) +
                          " belongs to no set; apply cover_uncovered_elements first");
  }
  const Vertex t = ts_target(ts);
  GraphBuilder b(t + 1);
  Reduction r;
  r.certificate.source_digest = content_digest(serialize_threshold_set(ts));
  r.certificate.vertex_names.assign(static_cast<std::size_t>(t + 1), "");
  r.certificate.vertex_names[0] = "s";
  r.certificate.vertex_names[t] = "t";
  for (std::int32_t e = 0; e < ts.universe_size; ++e) {
    b.add_color("c" + std::to_string(e));
    r.certificate.vertex_names[1 + e] = "s" + std::to_string(e);
  }
  for (std::size_t q = 0; q < ts.sets.size(); ++q) {
    for (std::int32_t j = 0; j < ts.weights[q]; ++j) {
      r.certificate.vertex_names[ts_slot_vertex(ts, q, j)] = "S" + std::to_string(q) + "_" + std::to_string(j);
    }
  }

  for (std::int32_t e = 0; e < ts.universe_size; ++e) {
    const ColorSet c{e};
    b.add_edge(0, 1 + e, c);
    const auto chain = sets_containing(ts, e);
    std::vector<Vertex> prev{1 + e};
    for (std::size_t q : chain) {
      std::vector<Vertex> cur;
      for (std::int32_t j = 0; j < ts.weights[q]; ++j) cur.push_back(ts_slot_vertex(ts, q, j));
      for (Vertex a : prev) {
        for (Vertex z : cur) b.add_edge(a, z, c);
      }
      prev = std::move(cur);
    }
    if (!chain.empty()) {
      for (Vertex a : prev) b.add_edge(a, t, c);
    }
  }
  r.instance.graph = b.build();
  r.instance.source = 0;
  r.instance.target = t;
  r.instance.mode = Mode::Cdp;
  r.certificate.color_names = r.instance.graph.color_names();
  return r;
}

PathSolution lift_ts_solution(const ThresholdSetInstance& ts, const std::vector<std::int32_t>& chosen) {
  check_threshold_set(ts);
  if (!is_feasible_threshold_set(ts, chosen)) throw InvalidArgument("element set is not feasible");
  std::vector<std::int32_t> order = chosen;
  std::sort(order.begin(), order.end());
  std::vector<std::vector<char>> taken(ts.sets.size());
  for (std::size_t q = 0; q < ts.sets.size(); ++q) taken[q].assign(static_cast<std::size_t>(ts.weights[q]), 0);

  PathSolution sol;
  sol.mode = Mode::Cdp;
  for (std::int32_t e : order) {
    UniColorPath p;
    p.color = e;
    p.vertices = {0, 1 + e};
    std::int32_t lane = -1;
    for (std::size_t q : sets_containing(ts, e)) {
      std::int32_t slot = -1;
      if (lane >= 0 && lane < ts.weights[q] && !taken[q][lane]) {
        slot = lane;
      } else {
        for (std::int32_t j = 0; j < ts.weights[q] && slot < 0; ++j) {
          if (!taken[q][j]) slot = j;
        }
      }
      if (slot < 0) throw InvalidArgument("element set is not feasible");
      taken[q][slot] = 1;
      lane = slot;
      p.vertices.push_back(ts_slot_vertex(ts, q, slot));
    }
    if (lane < 0) throw InvalidArgument("element " + std::to_string(e) + " belongs to no set");
    p.vertices.push_back(ts_target(ts));
    sol.paths.push_back(std::move(p));
  }
  return sol;
}

std::vector<std::int32_t> project_paths_to_ts(const ThresholdSetInstance& ts, const PathSolution& sol) {
  const Reduction red = reduce_ts_to_cdp(ts);
  const auto report = validate_solution(red.instance, sol);
  if (!report) throw InvalidArgument("solution is infeasible on the reduced instance: " + report.summary());
  std::vector<std::int32_t> out;
  for (const auto& p : sol.paths) out.push_back(p.color);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ecdp
