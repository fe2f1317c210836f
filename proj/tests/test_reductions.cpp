#include <doctest.h>

#include <algorithm>
#include <set>

#include "ecdp/ecg_io.hpp"
#include "ecdp/generators.hpp"
#include "ecdp/oracle.hpp"
#include "ecdp/reductions.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

using namespace ecdp;

namespace {

bool independent(const CubicGraph& g, const std::vector<std::int32_t>& set) {
  for (auto u : set) {
    for (auto v : set) {
      if (u != v && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("K4 gadget layout") {
  const auto g = fixtures::k4();
  const auto r = reduce_isc_to_cddp(g);
  const auto& h = r.instance.graph;
  CHECK(h.vertex_count() == 18);
  CHECK(h.color_count() == 10);
  CHECK(r.instance.target == 17);
  CHECK(h.edge_count() == 40);  // last port edge to t carries both colors
  CHECK(r.certificate.vertex_names[isc::port(0, 1)] == "v0_2");
  CHECK(r.certificate.color_names[4] == "c0_1");
  CHECK(h.has_color(isc::port(0, 0), isc::port(0, 1), 0));
  CHECK(h.has_color(0, isc::port(1, 0), 4));  // port of 1 toward 0 carries c0_1
}

TEST_CASE("independent set on cubic graphs maps to |E| + alpha paths") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto g = seed == 0 ? fixtures::k4() : gen_random_cubic(seed < 4 ? 6 : 8, seed);
    const auto r = reduce_isc_to_cddp(g);
    const int alpha = reference::max_independent_set_scan(g.as_simple());
    const int edges = static_cast<int>(g.edges().size());
    const auto best = solve_exact(r.instance);
    CHECK(static_cast<int>(best.size()) == edges + alpha);

    const auto is = solve_is_bruteforce(g.as_simple());
    const auto lifted = lift_is_to_paths(g, is);
    CHECK(validate_solution(r.instance, lifted).valid());
    CHECK(static_cast<int>(lifted.size()) == edges + alpha);

    const auto projected = project_paths_to_is(g, best);
    CHECK(independent(g, projected));
    CHECK(static_cast<int>(projected.size()) >= static_cast<int>(best.size()) - edges);
  }
}

TEST_CASE("projection rejects short or infeasible solutions") {
  const auto g = fixtures::k4();
  PathSolution few;
  few.mode = Mode::Cddp;
  CHECK_THROWS_AS(project_paths_to_is(g, few), InvalidArgument);
  auto bad = lift_is_to_paths(g, {0});
  bad.paths.push_back(bad.paths.front());
  CHECK_THROWS_AS(project_paths_to_is(g, bad), InvalidArgument);
  CHECK_THROWS_AS(lift_is_to_paths(g, {0, 1}), InvalidArgument);
}

TEST_CASE("threshold set example reduces to the expected graph") {
  const auto ts = fixtures::threshold_example();
  const auto r = reduce_ts_to_cdp(ts);
  const auto& h = r.instance.graph;
  // s=0, s0..s3=1..4, S0_0=5 S0_1=6, S1_0=7, S2_0=8 S2_1=9, t=10
  using E = std::pair<std::pair<int, int>, std::vector<ColorId>>;
  const std::vector<E> expected{
      {{0, 1}, {0}},    {{0, 2}, {1}},       {{0, 3}, {2}},       {{0, 4}, {3}},       {{1, 5}, {0}},
      {{1, 6}, {0}},    {{2, 5}, {1}},       {{2, 6}, {1}},       {{3, 5}, {2}},       {{3, 6}, {2}},
      {{4, 7}, {3}},    {{5, 7}, {0}},       {{5, 8}, {1, 2}},    {{5, 9}, {1, 2}},    {{6, 7}, {0}},
      {{6, 8}, {1, 2}}, {{6, 9}, {1, 2}},    {{7, 8}, {3}},       {{7, 9}, {3}},       {{7, 10}, {0}},
      {{8, 10}, {1, 2, 3}}, {{9, 10}, {1, 2, 3}},
  };
  REQUIRE(h.edge_count() == expected.size());
  std::size_t i = 0;
  for (const Edge& e : h.edges()) {
    CHECK(std::make_pair(e.u, e.v) == expected[i].first);
    CHECK(e.colors.ids() == expected[i].second);
    ++i;
  }
  CHECK(r.instance.target == 10);
  CHECK(r.certificate.vertex_names[7] == "S1_0");
  CHECK(ts_slot_vertex(ts, 2, 1) == 9);
}

TEST_CASE("lifting the example solution follows the slot lanes") {
  const auto ts = fixtures::threshold_example();
  const auto sol = lift_ts_solution(ts, {0, 1});
  REQUIRE(sol.size() == 2);
  CHECK(sol.paths[0].vertices == std::vector<Vertex>{0, 1, 5, 7, 10});
  CHECK(sol.paths[1].vertices == std::vector<Vertex>{0, 2, 6, 9, 10});
  CHECK(validate_solution(reduce_ts_to_cdp(ts).instance, sol).valid());
  CHECK(project_paths_to_ts(ts, sol) == std::vector<std::int32_t>{0, 1});
  CHECK_THROWS_AS(lift_ts_solution(ts, {0, 3}), InvalidArgument);
}

TEST_CASE("threshold set optimum is preserved") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto ts = cover_uncovered_elements(gen_random_ts(3 + static_cast<int>(seed % 4), 2 + static_cast<int>(seed % 3),
                                                           2, seed));
    const auto r = reduce_ts_to_cdp(ts);
    const int opt = reference::threshold_set_scan(ts);
    const auto best = solve_exact(r.instance);
    CHECK(static_cast<int>(best.size()) == opt);
    const auto t = project_paths_to_ts(ts, best);
    CHECK(is_feasible_threshold_set(ts, t));
    CHECK(static_cast<int>(t.size()) == opt);
    const auto lifted = lift_ts_solution(ts, solve_thresholdset_bruteforce(ts));
    CHECK(validate_solution(r.instance, lifted).valid());
  }
}

TEST_CASE("uncovered elements are rejected") {
  ThresholdSetInstance ts;
  ts.universe_size = 2;
  ts.sets = {{0}};
  ts.weights = {1};
  CHECK_THROWS_AS(reduce_ts_to_cdp(ts), InvalidArgument);
  CHECK(reduce_ts_to_cdp(cover_uncovered_elements(ts)).instance.graph.color_count() == 2);
}

TEST_CASE("shipped reduced instances match the generators") {
  const auto ts_reduced = load_instance(std::string(ECDP_DATA_DIR) + "/fig3-reduced.ecg");
  CHECK(serialize_instance(ts_reduced) == serialize_instance(reduce_ts_to_cdp(fixtures::threshold_example()).instance));
  auto k4 = load_instance(std::string(ECDP_DATA_DIR) + "/k4-reduced.ecg");
  CHECK(serialize_instance(k4) == serialize_instance(reduce_isc_to_cddp(fixtures::k4()).instance));
}
