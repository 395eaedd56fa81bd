#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bfsvm/knowledge.hpp"
#include "bfsvm/model.hpp"
#include "bfsvm/sample.hpp"
#include "bfsvm/table.hpp"

namespace bfsvm {

/// Band assignment: [0, z_inf) low, [z_inf, z_sup] proper, (z_sup, 1] high.
BandLabel band_label(double z, const SiliconBands& bands);

/// Which lags of which variables become features. Delay k means the value at
/// t - k. The silicon lag-1 term is mandatory: it feeds region tagging.
struct LagSpec {
  struct Entry {
    std::string column;
    std::vector<int> delays;
  };
  std::vector<Entry> entries;

  int max_delay() const;
  std::size_t feature_dim() const;
  void validate() const;

  static LagSpec furnace_a();  // five process variables at lags 0..5, sulfur and silicon at lag 1
  static LagSpec furnace_b();  // same shape with lags 0..4
};

/// One sample per time index t >= max_delay, features concatenated in declared
/// order. Labels are not assigned here; silicon fields are filled for banding
/// and region tagging downstream.
std::vector<Sample> build_lagged_features(const ProcessTable& table, const LagSpec& spec);

/// Per-feature min-max scaling fitted on the training split only. Constant
/// features map to 0.5; out-of-range test values clamp into [0, 1].
class Normalizer {
 public:
  static Normalizer fit(std::span<const Sample> training);

  std::vector<double> transform(std::span<const double> features) const;
  void apply(std::span<Sample> samples) const;

  const std::vector<std::pair<double, double>>& ranges() const noexcept { return ranges_; }
  static Normalizer from_ranges(std::vector<std::pair<double, double>> ranges);

 private:
  std::vector<std::pair<double, double>> ranges_;  // (min, max) per feature
};

/// A binary classification task: labeled, region-tagged samples plus the rule
/// that did the tagging.
struct BinaryTask {
  std::string name;
  std::vector<Sample> samples;
  KnowledgeRule rule{0.5, RuleDirection::AtOrBelow};

  bool degenerate() const;  // fewer than two classes present
};

enum class HighTaskMode : std::uint8_t {
  Pairwise,   // high classifier sees only proper + high samples
  OneVsRest,  // high classifier sees everything
};

/// Decomposes banded samples into the two binary tasks: low-vs-rest (positive
/// = low, rule at z_inf) and high task (positive = high, rule at z_sup).
std::pair<BinaryTask, BinaryTask> make_binary_tasks(std::span<const Sample> samples,
                                                    const SiliconBands& bands,
                                                    HighTaskMode mode = HighTaskMode::Pairwise);

/// Three-band decision: the low classifier speaks first (chilled hearth is
/// the severest risk), then the high classifier, else proper.
BandLabel cascade_predict(const TrainedModel& model_low, const TrainedModel& model_high,
                          std::span<const double> x);

/// The cascade's combination rule on raw binary votes, for direct testing.
BandLabel band_from_votes(int low_vote, int high_vote);

}  // namespace bfsvm
