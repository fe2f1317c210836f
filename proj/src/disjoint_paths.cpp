#include "ecdp/disjoint_paths.hpp"

#include <algorithm>
#include <tuple>

namespace ecdp {

namespace {

std::vector<char> exclusion_mask(const EdgeColoredGraph& g, std::span<const Vertex> excluded) {
  std::vector<char> out(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : excluded) {
    if (g.valid_vertex(v)) out[v] = 1;
  }
  return out;
}

std::vector<Vertex> kept_neighbors(const EdgeColoredGraph& g, const std::vector<char>& gone, Vertex v) {
  std::vector<Vertex> out;
  for (const Incidence& inc : g.incident(v)) {
    if (!gone[inc.other]) out.push_back(inc.other);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ColorId> intersect(const std::vector<ColorId>& a, const ColorSet& b) {
  std::vector<ColorId> out;
  for (ColorId c : a) {
    if (b.contains(c)) out.push_back(c);
  }
  return out;
}

}  // namespace

bool is_disjoint_paths(const EdgeColoredGraph& g, std::span<const Vertex> excluded) {
  const auto gone = exclusion_mask(g, excluded);
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::vector<char> seen(gone.size(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (gone[v]) continue;
    ++vertices;
    const auto nb = kept_neighbors(g, gone, v);
    if (nb.size() > 2) return false;
    edges += nb.size();
    if (seen[v]) continue;
    ++components;
    std::vector<Vertex> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : kept_neighbors(g, gone, u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  // A forest has exactly vertices - components edges.
  return edges / 2 + components == vertices;
}

std::vector<std::vector<Vertex>> induced_paths(const EdgeColoredGraph& g, std::span<const Vertex> excluded) {
  if (!is_disjoint_paths(g, excluded)) throw PreconditionError("interior is not disjoint paths");
  const auto gone = exclusion_mask(g, excluded);
  std::vector<char> seen(gone.size(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (gone[v] || seen[v] || kept_neighbors(g, gone, v).size() > 1) continue;
    std::vector<Vertex> seq{v};
    seen[v] = 1;
    Vertex prev = kNoVertex;
    Vertex cur = v;
    while (true) {
      Vertex next = kNoVertex;
      for (Vertex w : kept_neighbors(g, gone, cur)) {
        if (w != prev) next = w;
      }
      if (next == kNoVertex) break;
      seen[next] = 1;
      seq.push_back(next);
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(seq));
  }
  return out;
}

std::vector<IntervalPath> interval_candidates(const ProblemInstance& inst, const std::vector<Vertex>& seq,
                                              std::size_t component) {
  const auto& g = inst.graph;
  const Vertex s = inst.source;
  const Vertex t = inst.target;
  std::vector<ColorId> all(static_cast<std::size_t>(g.color_count()));
  for (ColorId c = 0; c < g.color_count(); ++c) all[c] = c;
  static const ColorSet kEmpty;
  auto between = [&](Vertex a, Vertex b) -> const ColorSet& {
    const ColorSet* cs = g.colors_between(a, b);
    return cs ? *cs : kEmpty;
  };

  std::vector<IntervalPath> out;
  for (std::size_t a = 0; a < seq.size(); ++a) {
    std::vector<ColorId> chain = all;
    for (std::size_t b = a; b < seq.size(); ++b) {
      if (b > a) chain = intersect(chain, between(seq[b - 1], seq[b]));
      if (chain.empty()) break;
      const std::size_t length = b - a + 2;
      if (inst.length_bound && length > static_cast<std::size_t>(*inst.length_bound)) break;
      for (bool reversed : {false, true}) {
        const Vertex entry = reversed ? seq[b] : seq[a];
        const Vertex exit = reversed ? seq[a] : seq[b];
        for (ColorId c : intersect(intersect(chain, between(s, entry)), between(exit, t))) {
          out.push_back({component, a, b, reversed, c});
        }
        if (a == b) break;
      }
    }
  }
  return out;
}

namespace {

UniColorPath materialize(const ProblemInstance& inst, const std::vector<Vertex>& seq, const IntervalPath& ip) {
  UniColorPath p;
  p.color = ip.color;
  p.vertices.push_back(inst.source);
  if (ip.reversed) {
    for (std::size_t i = ip.last + 1; i-- > ip.first;) p.vertices.push_back(seq[i]);
  } else {
    for (std::size_t i = ip.first; i <= ip.last; ++i) p.vertices.push_back(seq[i]);
  }
  p.vertices.push_back(inst.target);
  return p;
}

}  // namespace

PathSolution solve_disjoint_paths_cdp(const ProblemInstance& inst, IntervalRule rule) {
  if (inst.mode != Mode::Cdp) throw PreconditionError("disjoint-paths solver handles CDP only");
  const Vertex ends[] = {inst.source, inst.target};
  if (!is_disjoint_paths(inst.graph, ends)) throw PreconditionError("interior is not disjoint paths");

  PathSolution sol;
  sol.mode = Mode::Cdp;
  if (const ColorSet* direct = inst.graph.colors_between(inst.source, inst.target)) {
    sol.paths.push_back({{inst.source, inst.target}, direct->front()});
  }

  const auto comps = induced_paths(inst.graph, ends);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    auto cand = interval_candidates(inst, comps[ci], ci);
    if (rule == IntervalRule::EarliestEnd) {
      std::sort(cand.begin(), cand.end(), [](const IntervalPath& x, const IntervalPath& y) {
        return std::make_tuple(x.last, y.first, x.reversed, x.color) <
               std::make_tuple(y.last, x.first, y.reversed, y.color);
      });
      bool any = false;
      std::size_t boundary = 0;  // first free position
      for (const auto& ip : cand) {
        if (any && ip.first < boundary) continue;
        sol.paths.push_back(materialize(inst, comps[ci], ip));
        boundary = ip.last + 1;
        any = true;
      }
    } else {
      std::sort(cand.begin(), cand.end(), [](const IntervalPath& x, const IntervalPath& y) {
        return std::make_tuple(x.last - x.first, x.first, x.reversed, x.color) <
               std::make_tuple(y.last - y.first, y.first, y.reversed, y.color);
      });
      std::vector<char> taken(comps[ci].size(), 0);
      for (const auto& ip : cand) {
        bool free = true;
        for (std::size_t i = ip.first; i <= ip.last && free; ++i) free = !taken[i];
        if (!free) continue;
        for (std::size_t i = ip.first; i <= ip.last; ++i) taken[i] = 1;
        sol.paths.push_back(materialize(inst, comps[ci], ip));
      }
    }
  }
  return sol;
}

}  // namespace ecdp
