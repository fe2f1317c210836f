#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ecdp/instance.hpp"

namespace ecdp::cli {

struct CorpusEntry {
  std::string name;
  ProblemInstance instance;
};

/// fig2, fig3-reduced and k4-reduced from `data_dir` plus `seeds` random
/// instances, each in both modes.
std::vector<CorpusEntry> default_corpus(const std::string& data_dir, int seeds);

struct BenchRow {
  std::string instance;
  std::string mode;
  std::string algorithm;
  std::string status;  // ok | skipped | discrepancy | error
  long value = -1;
  long oracle = -1;
  double wall_ms = 0;
  std::string note;
};

/// Every algorithm on every entry, compared with the oracle. Instances run
/// concurrently; rows come back in corpus order, algorithms in fixed order.
std::vector<BenchRow> run_bench(const std::vector<CorpusEntry>& corpus);

nlohmann::json bench_report(const std::vector<BenchRow>& rows);

}  // namespace ecdp::cli
