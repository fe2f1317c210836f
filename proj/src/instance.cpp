#include "ecdp/instance.hpp"

#include <set>
#include <unordered_map>

namespace ecdp {

std::span<const Vertex> UniColorPath::internal() const {
  if (vertices.size() < 2) return {};
  return std::span<const Vertex>(vertices).subspan(1, vertices.size() - 2);
}

void PathSolution::append(const PathSolution& other) {
  paths.insert(paths.end(), other.paths.begin(), other.paths.end());
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

ValidationReport validate_instance(const ProblemInstance& inst) {
  ValidationReport report;
  report.violations = validate_graph(inst.graph);
  const auto& g = inst.graph;
  if (!g.valid_vertex(inst.source)) report.violations.push_back("source out of range");
  if (!g.valid_vertex(inst.target)) report.violations.push_back("target out of range");
  if (inst.source == inst.target) report.violations.push_back("source equals target");
  if (inst.length_bound && *inst.length_bound < 1) {
    report.violations.push_back("length bound must be at least 1");
  }
  return report;
}

ValidationReport validate_solution(const ProblemInstance& inst, const PathSolution& sol) {
  ValidationReport report;
  auto& out = report.violations;
  const auto& g = inst.graph;
  if (sol.mode != inst.mode) {
    out.push_back("solution mode " + std::string(to_string(sol.mode)) + " differs from instance mode " +
                  std::string(to_string(inst.mode)));
  }

  std::unordered_map<Vertex, std::size_t> owner;
  std::unordered_map<ColorId, std::size_t> color_owner;
  std::set<std::vector<Vertex>> sequences;

  for (std::size_t i = 0; i < sol.paths.size(); ++i) {
    const UniColorPath& p = sol.paths[i];
    const std::string tag = "path " + std::to_string(i);
    if (p.color < 0 || p.color >= g.color_count()) {
      out.push_back(tag + ": unknown color");
      continue;
    }
    const std::string& cname = g.color_name(p.color);
    if (p.vertices.size() < 2) {
      out.push_back(tag + ": fewer than two vertices");
      continue;
    }
    if (p.vertices.front() != inst.source) out.push_back(tag + ": does not start at the source");
    if (p.vertices.back() != inst.target) out.push_back(tag + ": does not end at the target");

    std::set<Vertex> on_path;
    for (Vertex v : p.vertices) {
      if (!g.valid_vertex(v)) {
        out.push_back(tag + ": vertex " + std::to_string(v) + " out of range");
      } else if (!on_path.insert(v).second) {
        out.push_back(tag + ": repeats vertex " + std::to_string(v));
      }
    }
    for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j) {
      const Vertex a = p.vertices[j];
      const Vertex b = p.vertices[j + 1];
      if (!g.has_edge(a, b)) {
        out.push_back(tag + ": {" + std::to_string(a) + "," + std::to_string(b) + "} is not an edge");
      } else if (!g.has_color(a, b, p.color)) {
        out.push_back(tag + ": edge {" + std::to_string(a) + "," + std::to_string(b) +
                      "} lacks color " + cname);
      }
    }
    if (inst.length_bound && p.length() > static_cast<std::size_t>(*inst.length_bound)) {
      out.push_back(tag + ": length " + std::to_string(p.length()) + " exceeds bound " +
                    std::to_string(*inst.length_bound));
    }
    if (!sequences.insert(p.vertices).second) out.push_back(tag + ": duplicate path");

    for (Vertex v : p.internal()) {
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh && it->second != i) {
        out.push_back(tag + ": shares internal vertex " + std::to_string(v) + " with path " +
                      std::to_string(it->second));
      }
    }
    if (sol.mode == Mode::Cddp) {
      auto [it, fresh] = color_owner.emplace(p.color, i);
      if (!fresh) out.push_back(tag + ": duplicate color " + cname);
    }
  }
  return report;
}

std::vector<Vertex> interior_vertices(const ProblemInstance& inst) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) {
    if (v != inst.source && v != inst.target) out.push_back(v);
  }
  return out;
}

ProblemInstance with_graph(const ProblemInstance& inst, EdgeColoredGraph graph) {
  ProblemInstance copy{std::move(graph), inst.source, inst.target, inst.length_bound, inst.mode};
  return copy;
}

ProblemInstance without_direct_edge(const ProblemInstance& inst) {
  if (!inst.graph.has_edge(inst.source, inst.target)) return inst;
  std::vector<Edge> kept;
  for (const Edge& e : inst.graph.edges()) {
    const bool direct = (e.u == inst.source && e.v == inst.target) ||
                        (e.u == inst.target && e.v == inst.source);
    if (!direct) kept.push_back(e);
  }
  return with_graph(inst, EdgeColoredGraph(inst.graph.vertex_count(), inst.graph.color_names(),
                                           std::move(kept)));
}

}  // namespace ecdp
