#pragma once

#include <string>

#include <json.hpp>

#include "ecdp/instance.hpp"

namespace ecdp {

inline constexpr int kRunRecordVersion = 1;

/// Run record document:
///   {format: "ecdp-run", version: 1, mode, algorithm, value,
///    paths: [{color: <name>, vertices: [...]}], stats: {...},
///    instance_digest, params: {...}}
struct RunRecord {
  std::string algorithm;
  PathSolution solution;
  std::string instance_digest;
  nlohmann::json stats = nlohmann::json::object();
  nlohmann::json params = nlohmann::json::object();
};

nlohmann::json to_json(const ProblemInstance& inst, const RunRecord& record);

/// Reads the paths of a run record (or a bare {mode, paths} document). Colors
/// may be given by name or index. Throws ParseError on malformed documents.
PathSolution solution_from_json(const ProblemInstance& inst, const nlohmann::json& doc);

/// Digest of the canonical serialization.
std::string instance_digest(const ProblemInstance& inst);

}  // namespace ecdp
