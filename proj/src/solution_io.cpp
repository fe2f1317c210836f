#include "ecdp/solution_io.hpp"

#include "ecdp/ecg_io.hpp"

namespace ecdp {

using nlohmann::json;

std::string instance_digest(const ProblemInstance& inst) { return content_digest(serialize_instance(inst)); }

json to_json(const ProblemInstance& inst, const RunRecord& record) {
  json paths = json::array();
  for (const auto& p : record.solution.paths) {
    paths.push_back({{"color", inst.graph.color_name(p.color)}, {"vertices", p.vertices}});
  }
  return {{"format", "ecdp-run"},
          {"version", kRunRecordVersion},
          {"mode", std::string(to_string(record.solution.mode))},
          {"algorithm", record.algorithm},
          {"value", record.solution.size()},
          {"paths", std::move(paths)},
          {"stats", record.stats},
          {"instance_digest", record.instance_digest},
          {"params", record.params}};
}

PathSolution solution_from_json(const ProblemInstance& inst, const json& doc) {
  auto fail = [](const std::string& what) { return ParseError(0, "solution document: " + what); };
  if (!doc.is_object()) throw fail("expected an object");
  if (doc.contains("version") && doc["version"] != kRunRecordVersion) throw fail("unsupported version");
  PathSolution sol;
  sol.mode = inst.mode;
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw fail("mode must be a string");
    try {
      sol.mode = parse_mode(doc["mode"].get<std::string>());
    } catch (const EcdpError& e) {
      throw fail(e.what());
    }
  }
  if (!doc.contains("paths") || !doc["paths"].is_array()) throw fail("missing paths array");
  for (const auto& p : doc["paths"]) {
    if (!p.is_object() || !p.contains("color") || !p.contains("vertices") || !p["vertices"].is_array()) {
      throw fail("each path needs color and vertices");
    }
    UniColorPath path;
    const auto& c = p["color"];
    if (c.is_string()) {
      const auto id = inst.graph.find_color(c.get<std::string>());
      if (!id) throw fail("unknown color '" + c.get<std::string>() + "'");
      path.color = *id;
    } else if (c.is_number_integer()) {
      path.color = c.get<ColorId>();
    } else {
      throw fail("color must be a name or an index");
    }
    for (const auto& v : p["vertices"]) {
      if (!v.is_number_integer()) throw fail("vertices must be integers");
      path.vertices.push_back(v.get<Vertex>());
    }
    sol.paths.push_back(std::move(path));
  }
  if (doc.contains("value") && doc["value"].is_number_integer() &&
      doc["value"].get<std::size_t>() != sol.paths.size()) {
    throw fail("value differs from the number of paths");
  }
  return sol;
}

}  // namespace ecdp
