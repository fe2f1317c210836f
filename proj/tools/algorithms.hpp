#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ecdp/instance.hpp"
#include "ecdp/parallel.hpp"

namespace ecdp::cli {

/// Knobs shared by `solve` and `bench`.
struct SolveParams {
  std::string algo = "oracle";
  std::optional<int> max_len;
  std::optional<int> target;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::string strategy = "auto";  // auto | random | injective | witness
  int distance_max = 3;
  std::string color;  // flow only
  Execution exec = Execution::Parallel;
};

struct SolveOutcome {
  PathSolution solution;
  nlohmann::json stats = nlohmann::json::object();
};

const std::vector<std::string>& algorithm_names();

/// Runs one algorithm. `inst.length_bound` is already set from --max-len.
/// Throws PreconditionError when the algorithm does not apply.
SolveOutcome run_algorithm(const ProblemInstance& inst, const SolveParams& params);

nlohmann::json params_json(const SolveParams& params);

}  // namespace ecdp::cli
