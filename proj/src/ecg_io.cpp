#include "ecdp/ecg_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace ecdp {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

bool valid_color_token(std::string_view name) {
  if (name.empty()) return false;
  for (char ch : name) {
    if (ch == ',' || ch == '#' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') return false;
  }
  return true;
}

}  // namespace

ProblemInstance parse_instance(std::istream& in) {
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> t;
  std::optional<std::int64_t> l;
  std::vector<std::string> colors;
  std::unordered_map<std::string, ColorId> color_index;
  bool have_colors = false;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;

  auto check_vertex = [&](std::int64_t v, std::size_t line) {
    if (!n) throw ParseError(line, "vertex referenced before the 'n' line");
    if (v < 0 || v >= *n) throw ParseError(line, "vertex " + std::to_string(v) + " out of range");
    return static_cast<Vertex>(v);
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    const std::string_view kind = tok[0];

    auto expect_args = [&](std::size_t count) {
      if (tok.size() != count + 1) {
        throw ParseError(line_no, "malformed '" + std::string(kind) + "' line");
      }
    };

    if (kind == "n") {
      expect_args(1);
      if (n) throw ParseError(line_no, "duplicate 'n' line");
      n = parse_int(tok[1], line_no);
      if (*n < 0 || *n > (1 << 30)) throw ParseError(line_no, "invalid vertex count");
    } else if (kind == "colors") {
      if (have_colors) throw ParseError(line_no, "duplicate 'colors' line");
      have_colors = true;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        std::string name(tok[i]);
        if (!valid_color_token(name)) throw ParseError(line_no, "invalid color id '" + name + "'");
        if (!color_index.emplace(name, static_cast<ColorId>(colors.size())).second) {
          throw ParseError(line_no, "duplicate color '" + name + "'");
        }
        colors.push_back(std::move(name));
      }
    } else if (kind == "s") {
      expect_args(1);
      if (s) throw ParseError(line_no, "duplicate 's' line");
      s = check_vertex(parse_int(tok[1], line_no), line_no);
    } else if (kind == "t") {
      expect_args(1);
      if (t) throw ParseError(line_no, "duplicate 't' line");
      t = check_vertex(parse_int(tok[1], line_no), line_no);
    } else if (kind == "l") {
      expect_args(1);
      if (l) throw ParseError(line_no, "duplicate 'l' line");
      l = parse_int(tok[1], line_no);
      if (*l < 1) throw ParseError(line_no, "length bound must be at least 1");
    } else if (kind == "e") {
      expect_args(3);
      if (!have_colors) throw ParseError(line_no, "edge before the 'colors' line");
      Vertex u = check_vertex(parse_int(tok[1], line_no), line_no);
      Vertex v = check_vertex(parse_int(tok[2], line_no), line_no);
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (!seen.emplace(u, v).second) {
        throw ParseError(line_no, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      }
      std::vector<ColorId> ids;
      std::string_view list = tok[3];
      while (true) {
        const auto comma = list.find(',');
        const std::string name(list.substr(0, comma));
        auto it = color_index.find(name);
        if (it == color_index.end()) throw ParseError(line_no, "unknown color '" + name + "'");
        ids.push_back(it->second);
        if (comma == std::string_view::npos) break;
        list = list.substr(comma + 1);
      }
      edges.push_back({u, v, ColorSet(std::move(ids))});
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(kind) + "'");
    }
  }

  if (!n) throw ParseError(line_no + 1, "missing 'n' line");
  if (!s) throw ParseError(line_no + 1, "missing 's' line");
  if (!t) throw ParseError(line_no + 1, "missing 't' line");

  ProblemInstance inst;
  inst.graph = EdgeColoredGraph(static_cast<std::int32_t>(*n), std::move(colors), std::move(edges));
  inst.source = static_cast<Vertex>(*s);
  inst.target = static_cast<Vertex>(*t);
  if (l) inst.length_bound = static_cast<int>(*l);
  return inst;
}

ProblemInstance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EcdpError("cannot open '" + path + "'");
  return parse_instance(in);
}

std::string serialize_instance(const ProblemInstance& inst) {
  const auto& g = inst.graph;
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  out << "colors";
  for (const auto& name : g.color_names()) {
    if (!valid_color_token(name)) throw InvalidArgument("color id '" + name + "' is not serializable");
    out << ' ' << name;
  }
  out << '\n';
  out << "s " << inst.source << '\n';
  out << "t " << inst.target << '\n';
  if (inst.length_bound) out << "l " << *inst.length_bound << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ';
    bool first = true;
    for (ColorId c : e.colors) {
      if (!first) out << ',';
      out << g.color_name(c);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

void save_instance(const ProblemInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw EcdpError("cannot write '" + path + "'");
  out << serialize_instance(inst);
}

}  // namespace ecdp

namespace ecdp {

std::string content_digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace ecdp
