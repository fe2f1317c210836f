#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ecdp/instance.hpp"
#include "ecdp/parallel.hpp"

namespace ecdp {

/// Vertex labels in [0, h_v) and color labels in [0, h_c). Label -1 marks a
/// vertex or color the DP may not use; s and t are always -1.
struct Labeling {
  int h_v = 0;
  int h_c = 0;
  std::vector<int> vertex_label;
  std::vector<int> color_label;
};

inline constexpr int kMaxVertexLabels = 20;
inline constexpr int kMaxColorLabels = 12;

struct LabelBudget {
  int h_v = 0;
  int h_c = 0;
};

/// h_v = min(k(l-1), interior size), h_c = min(k, q). Throws InvalidArgument
/// when the resulting tables would exceed kMaxVertexLabels / kMaxColorLabels.
LabelBudget label_budget(const ProblemInstance& inst, int l, int k);

/// Independent uniform labels drawn from a generator seeded by (seed, trial).
/// A side whose budget equals its full size is labeled injectively.
Labeling random_labeling(const ProblemInstance& inst, LabelBudget budget, std::uint64_t seed, std::uint64_t trial);

/// Every non-isolated interior vertex and every used color its own label;
/// makes the decision exact.
Labeling injective_labeling(const ProblemInstance& inst);

/// Distinct labels on the internal vertices and colors of `witness`, label 0
/// on everything else.
Labeling witness_labeling(const ProblemInstance& inst, const PathSolution& witness, LabelBudget budget);

enum class Acceptance {
  AnySubset,    // Pi[L', M, k] for some L', M
  FullLabelSet  // Pi[L_v, L_c, k] only
};

/// The tables for one labeling: S per color, then Pi for z = 0..k_max.
/// With mode CDP the color labels are ignored and Pi is indexed by L' only.
class ColorCodingTables {
 public:
  ColorCodingTables(const ProblemInstance& inst, const Labeling& labeling, int l, int k_max, Mode mode,
                    Execution exec = Execution::Serial);

  /// A lambda-colored s-u path whose vertices after s carry exactly the labels of `mask`.
  bool s_entry(std::uint32_t mask, Vertex u, ColorId lambda) const;
  /// z color-disjoint (CDDP) or disjoint (CDP) paths, none using the direct
  /// edge, perfect for `mask` and `colors`. `colors` is ignored for CDP.
  bool pi_entry(std::uint32_t mask, std::uint32_t colors, int z) const;

  bool accepts(int k, Acceptance rule = Acceptance::AnySubset) const;
  /// Largest accepted k <= k_max (direct edge included).
  int best(Acceptance rule = Acceptance::AnySubset) const;
  /// k paths backing an accepted k; std::nullopt when k is not accepted.
  std::optional<PathSolution> extract(int k, Acceptance rule = Acceptance::AnySubset) const;

  int k_max() const { return k_max_; }

 private:
  std::size_t s_index(std::uint32_t mask, int local) const { return static_cast<std::size_t>(mask) * interior_.size() + static_cast<std::size_t>(local); }
  std::size_t pi_index(std::uint32_t mask, std::uint32_t colors) const { return (static_cast<std::size_t>(mask) << hc_) | colors; }
  bool pi_any(int z, Acceptance rule, std::optional<int> free_label) const;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> pi_cell(int z, Acceptance rule, std::optional<int> free_label) const;
  std::vector<Vertex> trace_s(std::uint32_t mask, Vertex u, ColorId lambda) const;
  void unwind(std::uint32_t mask, std::uint32_t colors, int z, std::vector<UniColorPath>& out) const;

  const ProblemInstance& inst_;
  Labeling lab_;
  int l_;
  int k_max_;
  Mode mode_;
  int hv_;
  int hc_;  // color-label bits used in Pi (0 for CDP)
  std::vector<Vertex> interior_;  // labeled interior vertices
  std::vector<int> local_;        // vertex -> index in interior_ or -1
  std::vector<std::vector<std::uint8_t>> s_;  // per color; empty when skipped
  std::vector<std::vector<std::uint8_t>> a_;  // per color: [mask]
  std::vector<std::vector<std::uint8_t>> b_;  // per color label (CDDP) or one row (CDP): [mask]
  std::vector<std::vector<std::uint8_t>> pi_;  // per z: [mask << hc | colors]
  std::vector<ColorId> direct_colors_;
};

enum class StrategyKind { Random, Injective, Witness };

struct LabelingStrategy {
  StrategyKind kind = StrategyKind::Random;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::optional<PathSolution> witness;  // required for Witness
};

struct ColorCodingResult {
  bool accepted = false;
  PathSolution witness;
  std::size_t trial = 0;        // index of the labeling that produced the witness
  std::size_t trials_run = 0;
};

/// Decision l-MaxCDDP: k color-disjoint paths of at most l edges. Never a
/// false positive; false negatives only under random labelings.
ColorCodingResult solve_l_cddp(const ProblemInstance& inst, int l, int k, const LabelingStrategy& strategy,
                               Execution exec = Execution::Parallel, Acceptance rule = Acceptance::AnySubset);

/// Decision l-MaxCDP, same DP without color labels.
ColorCodingResult solve_l_cdp(const ProblemInstance& inst, int l, int k, const LabelingStrategy& strategy,
                              Execution exec = Execution::Parallel, Acceptance rule = Acceptance::AnySubset);

/// Largest z <= k_max found by any labeling of the strategy, with its witness.
/// The lowest trial index wins ties. Mode taken from the instance.
ColorCodingResult maximize_color_coding(const ProblemInstance& inst, int l, int k_max,
                                        const LabelingStrategy& strategy, Execution exec = Execution::Parallel);

/// ceil(ln(1/delta) * e^{k(l-1)} * e^k): trials for failure probability delta.
double recommended_trials(int k, int l, double delta);

}  // namespace ecdp
