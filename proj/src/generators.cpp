#include "ecdp/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace ecdp {

namespace {

GraphBuilder builder_with_colors(std::int32_t n, std::int32_t q) {
  GraphBuilder b(n);
  for (std::int32_t c = 0; c < q; ++c) b.add_color("c" + std::to_string(c));
  return b;
}

ColorSet random_colors(std::mt19937_64& rng, std::int32_t q, int at_most) {
  std::uniform_int_distribution<int> count(1, std::max(1, std::min(at_most, q)));
  std::uniform_int_distribution<ColorId> pick(0, q - 1);
  ColorSet out;
  const int want = count(rng);
  while (static_cast<int>(out.size()) < want) out.insert(pick(rng));
  return out;
}

void check_common(std::int32_t n, std::int32_t q) {
  if (n < 2) throw InvalidArgument("need at least two vertices");
  if (q < 1) throw InvalidArgument("need at least one color");
}

ProblemInstance finish(const GraphBuilder& b, std::int32_t n) {
  ProblemInstance inst;
  inst.graph = b.build();
  inst.source = 0;
  inst.target = n - 1;
  return inst;
}

}  // namespace

CubicGraph gen_random_cubic(std::int32_t n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("cubic graphs need an even n >= 4");
  std::mt19937_64 rng(seed);
  std::vector<std::int32_t> points;
  for (std::int32_t v = 0; v < n; ++v) points.insert(points.end(), 3, v);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<std::int32_t, std::int32_t>> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      auto u = points[i];
      auto v = points[i + 1];
      if (u > v) std::swap(u, v);
      ok = u != v && edges.emplace(u, v).second;
    }
    if (ok) return CubicGraph(n, {edges.begin(), edges.end()});
  }
  throw InvalidArgument("pairing model failed to produce a simple cubic graph");
}

ProblemInstance gen_random_instance(std::int32_t n, std::int32_t q, double edge_prob, int colors_per_edge,
                                    std::uint64_t seed) {
  check_common(n, q);
  if (colors_per_edge < 1) throw InvalidArgument("colors_per_edge must be positive");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_prob);
  GraphBuilder b = builder_with_colors(n, q);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v, random_colors(rng, q, colors_per_edge));
    }
  }
  return finish(b, n);
}

ProblemInstance gen_tree_instance(std::int32_t n, std::int32_t q, std::uint64_t seed, double t_prob) {
  check_common(n, q);
  if (n < 3) throw InvalidArgument("tree instances need at least three vertices");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution to_t(t_prob);
  GraphBuilder b = builder_with_colors(n, q);
  const Vertex t = n - 1;
  for (Vertex v = 1; v < t; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    b.add_edge(parent(rng), v, random_colors(rng, q, 2));
  }
  for (Vertex v = 0; v < t; ++v) {
    if (to_t(rng)) b.add_edge(v, t, random_colors(rng, q, 2));
  }
  return finish(b, n);
}

ProblemInstance gen_disjoint_paths_instance(std::int32_t n, std::int32_t q, std::uint64_t seed, int extra) {
  check_common(n, q);
  const std::int32_t interior = n - 2;
  if (extra < 0 || extra > interior) throw InvalidArgument("invalid number of hub vertices");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution half(0.5);
  std::bernoulli_distribution cut(0.3);
  GraphBuilder b = builder_with_colors(n, q);
  const Vertex s = 0;
  const Vertex t = n - 1;
  const std::int32_t plain = interior - extra;
  for (Vertex v = 2; v <= plain; ++v) {
    if (!cut(rng)) b.add_edge(v - 1, v, random_colors(rng, q, 2));
  }
  for (Vertex v = 1; v <= interior; ++v) {
    if (half(rng)) b.add_edge(s, v, random_colors(rng, q, 2));
    if (half(rng)) b.add_edge(v, t, random_colors(rng, q, 2));
  }
  for (Vertex hub = plain + 1; hub <= interior; ++hub) {
    std::uniform_int_distribution<Vertex> other(1, interior);
    for (int i = 0; i < 3; ++i) {
      const Vertex w = other(rng);
      if (w != hub) b.add_edge(hub, w, random_colors(rng, q, 2));
    }
  }
  return finish(b, n);
}

ThresholdSetInstance gen_random_ts(std::int32_t universe_size, std::int32_t q, std::int32_t max_w,
                                   std::uint64_t seed) {
  if (universe_size < 1 || q < 0 || max_w < 1) throw InvalidArgument("invalid threshold set parameters");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution half(0.5);
  std::uniform_int_distribution<std::int32_t> weight(1, max_w);
  std::uniform_int_distribution<std::int32_t> any(0, universe_size - 1);
  ThresholdSetInstance ts;
  ts.universe_size = universe_size;
  for (std::int32_t i = 0; i < q; ++i) {
    std::vector<std::int32_t> set;
    for (std::int32_t e = 0; e < universe_size; ++e) {
      if (half(rng)) set.push_back(e);
    }
    if (set.empty()) set.push_back(any(rng));
    ts.sets.push_back(std::move(set));
    ts.weights.push_back(weight(rng));
  }
  return ts;
}

}  // namespace ecdp
