#include <doctest.h>

#include <algorithm>

#include "ecdp/ecg_io.hpp"
#include "ecdp/generators.hpp"
#include "ecdp/graph.hpp"
#include "ecdp/instance.hpp"
#include "fixtures.hpp"

using namespace ecdp;

namespace {

bool mentions(const ValidationReport& r, const std::string& text) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) { return v.find(text) != std::string::npos; });
}

PathSolution paths(Mode mode, std::vector<UniColorPath> ps) {
  PathSolution sol;
  sol.mode = mode;
  sol.paths = std::move(ps);
  return sol;
}

constexpr ColorId kRed = 0;
constexpr ColorId kGreen = 1;

}  // namespace

TEST_CASE("color sets stay sorted and unique") {
  ColorSet cs{3, 1, 3, 2};
  CHECK(cs.ids() == std::vector<ColorId>{1, 2, 3});
  cs.erase(2);
  cs.insert(0);
  CHECK(cs.ids() == std::vector<ColorId>{0, 1, 3});
  CHECK(cs.contains(3));
  CHECK_FALSE(cs.contains(2));
}

TEST_CASE("builder rejects invalid edges") {
  GraphBuilder b(3);
  b.add_color("a");
  CHECK_THROWS_AS(b.add_edge(0, 0, {"a"}), InvalidArgument);
  CHECK_THROWS_AS(b.add_edge(0, 5, {"a"}), InvalidArgument);
  CHECK_THROWS_AS(b.add_edge(0, 1, {"zzz"}), InvalidArgument);
  CHECK_THROWS_AS(b.add_color("a"), InvalidArgument);
  b.add_edge(0, 1, {"a"});
  b.add_color("b");
  b.add_edge(1, 0, {"b"});
  const auto g = b.build();
  CHECK(g.edge_count() == 1);
  CHECK(g.colors_between(0, 1)->size() == 2);
}

TEST_CASE("diamond instance is valid") {
  const auto inst = fixtures::diamond();
  CHECK(validate_instance(inst).valid());
  CHECK(inst.graph.has_color(fixtures::kS, fixtures::kV, kGreen));
  CHECK_FALSE(inst.graph.has_color(fixtures::kS, fixtures::kU, kGreen));
}

TEST_CASE("instance violations are reported") {
  auto inst = fixtures::diamond();
  inst.target = inst.source;
  CHECK(mentions(validate_instance(inst), "source equals target"));

  EdgeColoredGraph raw(3, {"a"}, {Edge{0, 1, ColorSet{4}}});
  ProblemInstance bad;
  bad.graph = raw;
  bad.source = 0;
  bad.target = 2;
  CHECK(mentions(validate_instance(bad), "unknown color"));

  EdgeColoredGraph loop(3, {"a"}, {Edge{1, 1, ColorSet{0}}});
  bad.graph = loop;
  CHECK(mentions(validate_instance(bad), "self-loop"));
}

TEST_CASE("solution validation on the diamond") {
  using fixtures::kS, fixtures::kT, fixtures::kU, fixtures::kV;
  const auto cddp = fixtures::diamond(Mode::Cddp);
  const auto cdp = fixtures::diamond(Mode::Cdp);

  CHECK(validate_solution(cddp, paths(Mode::Cddp, {{{kS, kV, kT}, kGreen}, {{kS, kU, kT}, kRed}})).valid());
  const auto twice_red = paths(Mode::Cddp, {{{kS, kV, kT}, kRed}, {{kS, kU, kT}, kRed}});
  CHECK(mentions(validate_solution(cddp, twice_red), "duplicate color red"));
  CHECK(validate_solution(cdp, paths(Mode::Cdp, {{{kS, kV, kT}, kRed}, {{kS, kU, kT}, kRed}})).valid());
}

TEST_CASE("mutated solutions are rejected") {
  using fixtures::kS, fixtures::kT, fixtures::kU, fixtures::kV;
  const auto inst = fixtures::diamond(Mode::Cdp);
  CHECK_FALSE(validate_solution(inst, paths(Mode::Cdp, {{{kS, kU, kT}, kGreen}})).valid());  // edge lacks color
  CHECK_FALSE(validate_solution(inst, paths(Mode::Cdp, {{{kS, kV, kU, kT}, kRed}})).valid());  // no edge v-u
  CHECK_FALSE(validate_solution(inst, paths(Mode::Cdp, {{{kV, kS, kU, kT}, kRed}})).valid());  // wrong start
  CHECK_FALSE(validate_solution(inst, paths(Mode::Cdp, {{{kS, kV, kT}, kRed}, {{kS, kV, kT}, kGreen}})).valid());
  CHECK_FALSE(validate_solution(inst, paths(Mode::Cddp, {{{kS, kV, kT}, kRed}})).valid());  // mode mismatch
  CHECK_FALSE(validate_solution(inst, paths(Mode::Cdp, {{{kS, kV, kT}, 7}})).valid());
  auto bounded = inst;
  bounded.length_bound = 1;
  CHECK(mentions(validate_solution(bounded, paths(Mode::Cdp, {{{kS, kV, kT}, kRed}})), "bound"));
}

TEST_CASE("parsing the diamond text") {
  const auto inst = parse_instance(
      "n 4\ncolors red green\ns 0\nt 3\ne 0 1 red,green\ne 1 3 red,green\ne 0 2 red\ne 2 3 red\n");
  const auto expected = fixtures::diamond(Mode::Cdp);
  CHECK(serialize_instance(inst) == serialize_instance(expected));
  CHECK(inst.mode == Mode::Cdp);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_instance(std::string_view(text));
    } catch (const ParseError& e) {
      return static_cast<long>(e.line());
    }
    return -1L;
  };
  CHECK(line_of("n 2\ncolors red\ns 0\nt 1\ne 0 0 red\n") == 5);
  CHECK(line_of("n 2\ncolors red\ns 0\nt 1\ne 0 1 red\ne 1 0 red\n") == 6);
  CHECK(line_of("n 2\ncolors red\ns 0\nt 9\n") == 4);
  CHECK(line_of("n 2\ncolors red\ns 0\nt 1\ne 0 1 blue\n") == 5);
  CHECK(line_of("n 2\ncolors red\ns 0\nt 1\nfoo\n") == 5);
  try {
    parse_instance(std::string_view("n 2\ncolors red\ns 0\nt 1\ne 0 0 red\n"));
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
}

TEST_CASE("empty edge section gives isolated vertices") {
  const auto inst = parse_instance(std::string_view("n 5\ncolors a\ns 0\nt 4\n"));
  CHECK(inst.graph.vertex_count() == 5);
  CHECK(inst.graph.edge_count() == 0);
}

TEST_CASE("serialize and parse round-trip on random instances") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto inst = gen_random_instance(3 + static_cast<int>(seed % 9), 1 + static_cast<int>(seed % 4), 0.4, 2, seed);
    if (seed % 3 == 0) inst.length_bound = 2 + static_cast<int>(seed % 4);
    const auto text = serialize_instance(inst);
    CHECK(serialize_instance(parse_instance(text)) == text);
  }
}

TEST_CASE("remove_vertices and restrict_colors") {
  using fixtures::kS, fixtures::kT, fixtures::kU, fixtures::kV;
  const auto inst = fixtures::diamond();
  const Vertex v[] = {kV};
  const auto g = remove_vertices(inst.graph, v);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(kS, kU));
  CHECK(g.has_edge(kU, kT));
  CHECK(g.degree(kV) == 0);

  const ColorId red[] = {kRed};
  const auto h = restrict_colors(inst.graph, red);
  CHECK(h.edge_count() == 2);
  CHECK(h.colors_between(kS, kV)->ids() == std::vector<ColorId>{kGreen});
  CHECK_FALSE(h.has_edge(kS, kU));
  CHECK(h.color_count() == 2);

  auto removed = with_graph(inst, remove_vertices(inst.graph, std::vector<Vertex>{kU, kV}));
  CHECK(validate_instance(removed).valid());
}
