#include <doctest.h>

#include "ecdp/generators.hpp"
#include "ecdp/oracle.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

using namespace ecdp;

TEST_CASE("diamond optimum is 2 in both modes") {
  for (Mode mode : {Mode::Cdp, Mode::Cddp}) {
    const auto inst = fixtures::diamond(mode);
    const auto sol = solve_exact(inst);
    CHECK(sol.size() == 2);
    CHECK(validate_solution(inst, sol).valid());
  }
}

TEST_CASE("diamond enumeration") {
  const auto inst = fixtures::diamond();
  const auto paths = enumerate_unicolor_paths(inst);
  REQUIRE(paths.size() == 3);  // svt red, sut red, svt green
  CHECK(paths[0].color == 0);
  CHECK(paths[2].color == 1);
  CHECK(paths[2].vertices == std::vector<Vertex>{0, 1, 3});
}

TEST_CASE("path cap overflows") {
  const auto inst = gen_random_instance(12, 2, 0.9, 2, 3);
  CHECK_THROWS_AS(enumerate_unicolor_paths(inst, 5), OverflowError);
  try {
    enumerate_unicolor_paths(inst, 5);
  } catch (const OverflowError& e) {
    CHECK(e.cap() == 5);
  }
}

TEST_CASE("conflict rules") {
  const UniColorPath a{{0, 1, 3}, 0};
  const UniColorPath b{{0, 2, 3}, 0};
  const UniColorPath c{{0, 1, 2, 3}, 1};
  const UniColorPath d{{0, 3}, 0};
  const UniColorPath e{{0, 3}, 1};
  CHECK_FALSE(paths_conflict(a, b, Mode::Cdp));
  CHECK(paths_conflict(a, b, Mode::Cddp));
  CHECK(paths_conflict(a, c, Mode::Cdp));
  CHECK(paths_conflict(d, e, Mode::Cdp));  // same sequence
  CHECK_FALSE(paths_conflict(a, e, Mode::Cdp));
}

TEST_CASE("direct edge counts once") {
  GraphBuilder b(3);
  b.add_color("a");
  b.add_color("b");
  b.add_edge(0, 2, {"a", "b"});
  b.add_edge(0, 1, {"a"});
  b.add_edge(1, 2, {"a"});
  ProblemInstance inst{b.build(), 0, 2, std::nullopt, Mode::Cdp};
  CHECK(solve_exact(inst).size() == 2);
  inst.mode = Mode::Cddp;
  CHECK(solve_exact(inst).size() == 2);  // direct via b, s-1-t via a
}

TEST_CASE("oracle agrees with the reference on random instances") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);
    auto inst = gen_random_instance(n, 1 + static_cast<int>(seed % 4), 0.45, 2, seed);
    inst.mode = seed % 2 ? Mode::Cddp : Mode::Cdp;
    if (seed % 5 == 0) inst.length_bound = 2 + static_cast<int>(seed % 3);
    const auto sol = solve_exact(inst, {kDefaultPathCap, Execution::Serial});
    REQUIRE(validate_solution(inst, sol).valid());
    CHECK(static_cast<int>(sol.size()) == reference::optimum(inst));
    ++checked;
  }
  CHECK(checked == 300);
}

TEST_CASE("serial and parallel oracle return identical solutions") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto inst = gen_random_instance(9, 3, 0.5, 2, seed);
    inst.mode = seed % 2 ? Mode::Cddp : Mode::Cdp;
    const auto a = solve_exact(inst, {kDefaultPathCap, Execution::Serial});
    const auto b = solve_exact(inst, {kDefaultPathCap, Execution::Parallel});
    CHECK(a.paths == b.paths);
  }
}

TEST_CASE("independent set and threshold set brute force") {
  const auto k4 = fixtures::k4().as_simple();
  CHECK(solve_is_bruteforce(k4).size() == 1);
  CHECK(solve_thresholdset_bruteforce(fixtures::threshold_example()).size() == 2);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = gen_random_cubic(4 + 2 * static_cast<int>(seed % 6), seed).as_simple();
    CHECK(static_cast<int>(solve_is_bruteforce(g).size()) == reference::max_independent_set_scan(g));
    const auto ts = gen_random_ts(3 + static_cast<int>(seed % 8), 1 + static_cast<int>(seed % 5), 3, seed);
    const auto t = solve_thresholdset_bruteforce(ts);
    CHECK(is_feasible_threshold_set(ts, t));
    CHECK(static_cast<int>(t.size()) == reference::threshold_set_scan(ts));
  }
  CHECK_THROWS_AS(solve_is_bruteforce(gen_random_cubic(30, 1).as_simple()), InvalidArgument);
}
