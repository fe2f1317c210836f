#include "ecdp/source_problems.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace ecdp {

CubicGraph::CubicGraph(std::int32_t vertex_count,
                       std::vector<std::pair<std::int32_t, std::int32_t>> edges)
    : vertex_count_(vertex_count), neighbors_(static_cast<std::size_t>(std::max(vertex_count, 0))) {
  if (vertex_count < 0) throw InvalidArgument("negative vertex count");
  std::set<std::pair<std::int32_t, std::int32_t>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InvalidArgument("cubic graph edge out of range");
    }
    if (u == v) throw InvalidArgument("cubic graph has a self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) throw InvalidArgument("cubic graph has a parallel edge");
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
  }
  for (std::int32_t v = 0; v < vertex_count; ++v) {
    if (neighbors_[v].size() != 3) {
      throw InvalidArgument("graph is not cubic: vertex " + std::to_string(v) + " has degree " +
                            std::to_string(neighbors_[v].size()));
    }
    std::sort(neighbors_[v].begin(), neighbors_[v].end());
  }
  edges_.assign(seen.begin(), seen.end());
}

int CubicGraph::rank(std::int32_t v, std::int32_t neighbor) const {
  const auto& nb = neighbors_[v];
  auto it = std::find(nb.begin(), nb.end(), neighbor);
  if (it == nb.end()) throw InvalidArgument("not a neighbor");
  return static_cast<int>(it - nb.begin());
}

bool CubicGraph::adjacent(std::int32_t u, std::int32_t v) const {
  const auto& nb = neighbors_[u];
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

void check_threshold_set(const ThresholdSetInstance& ts) {
  if (ts.universe_size < 0) throw InvalidArgument("negative universe size");
  if (ts.sets.size() != ts.weights.size()) throw InvalidArgument("one weight per set is required");
  for (std::size_t i = 0; i < ts.sets.size(); ++i) {
    const auto& s = ts.sets[i];
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] < 0 || s[j] >= ts.universe_size) throw InvalidArgument("set element out of range");
      if (j > 0 && s[j] <= s[j - 1]) throw InvalidArgument("set members must be ascending and distinct");
    }
    if (ts.weights[i] < 0) throw InvalidArgument("negative set weight");
  }
}

bool is_feasible_threshold_set(const ThresholdSetInstance& ts, const std::vector<std::int32_t>& chosen) {
  std::vector<char> in(static_cast<std::size_t>(ts.universe_size), 0);
  for (auto e : chosen) {
    if (e < 0 || e >= ts.universe_size || in[e]) return false;
    in[e] = 1;
  }
  for (std::size_t i = 0; i < ts.sets.size(); ++i) {
    int hit = 0;
    for (auto e : ts.sets[i]) hit += in[e];
    if (hit > ts.weights[i]) return false;
  }
  return true;
}

std::vector<std::int32_t> uncovered_elements(const ThresholdSetInstance& ts) {
  std::vector<char> covered(static_cast<std::size_t>(ts.universe_size), 0);
  for (const auto& s : ts.sets) {
    for (auto e : s) covered[e] = 1;
  }
  std::vector<std::int32_t> out;
  for (std::int32_t e = 0; e < ts.universe_size; ++e) {
    if (!covered[e]) out.push_back(e);
  }
  return out;
}

ThresholdSetInstance cover_uncovered_elements(const ThresholdSetInstance& ts) {
  ThresholdSetInstance out = ts;
  for (auto e : uncovered_elements(ts)) {
    out.sets.push_back({e});
    out.weights.push_back(1);
  }
  return out;
}

namespace {

struct LineReader {
  std::istringstream in;
  std::size_t line_no = 0;

  bool next(std::vector<std::string>& tok) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
      std::istringstream ls(raw);
      tok.clear();
      for (std::string w; ls >> w;) tok.push_back(w);
      if (!tok.empty()) return true;
    }
    return false;
  }

  std::int32_t integer(const std::string& s) const {
    std::int32_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
      throw ParseError(line_no, "expected an integer, got '" + s + "'");
    }
    return v;
  }
};

}  // namespace

CubicGraph parse_cubic_graph(std::string_view text) {
  LineReader r{std::istringstream(std::string(text))};
  std::vector<std::string> tok;
  std::int32_t n = -1;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  while (r.next(tok)) {
    if (tok[0] == "n" && tok.size() == 2) {
      n = r.integer(tok[1]);
    } else if (tok[0] == "e" && tok.size() == 3) {
      edges.emplace_back(r.integer(tok[1]), r.integer(tok[2]));
    } else {
      throw ParseError(r.line_no, "malformed cubic graph line");
    }
  }
  if (n < 0) throw ParseError(r.line_no + 1, "missing 'n' line");
  return CubicGraph(n, std::move(edges));
}

std::string serialize_cubic_graph(const CubicGraph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

ThresholdSetInstance parse_threshold_set(std::string_view text) {
  LineReader r{std::istringstream(std::string(text))};
  std::vector<std::string> tok;
  ThresholdSetInstance ts;
  bool have_u = false;
  while (r.next(tok)) {
    if (tok[0] == "u" && tok.size() == 2) {
      ts.universe_size = r.integer(tok[1]);
      have_u = true;
    } else if (tok[0] == "set" && tok.size() >= 2) {
      ts.weights.push_back(r.integer(tok[1]));
      std::vector<std::int32_t> members;
      for (std::size_t i = 2; i < tok.size(); ++i) members.push_back(r.integer(tok[i]));
      std::sort(members.begin(), members.end());
      ts.sets.push_back(std::move(members));
    } else {
      throw ParseError(r.line_no, "malformed threshold set line");
    }
  }
  if (!have_u) throw ParseError(r.line_no + 1, "missing 'u' line");
  check_threshold_set(ts);
  return ts;
}

std::string serialize_threshold_set(const ThresholdSetInstance& ts) {
  std::ostringstream out;
  out << "u " << ts.universe_size << '\n';
  for (std::size_t i = 0; i < ts.sets.size(); ++i) {
    out << "set " << ts.weights[i];
    for (auto e : ts.sets[i]) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

}  // namespace ecdp
