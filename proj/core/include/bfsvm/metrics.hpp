#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bfsvm/sample.hpp"

namespace bfsvm {

// Ensemble accuracy weights for (class1, class2, class3) = (R1, R2, R3).
inline constexpr double kWeightClass1 = 0.6;
inline constexpr double kWeightClass2 = 0.1;
inline constexpr double kWeightClass3 = 0.3;

namespace detail {
constexpr double constexpr_abs(double x) { return x < 0 ? -x : x; }
}
static_assert(detail::constexpr_abs(kWeightClass1 + kWeightClass2 + kWeightClass3 - 1.0) < 1e-12,
              "ensemble weights must sum to 1");

/// Per-region prediction accuracy. A class with count 0 is "empty" and its
/// accuracy is meaningless; ensemble_accuracy redistributes its weight.
struct ClasswiseAccuracy {
  double acc_class1 = 0.0;
  double acc_class2 = 0.0;
  double acc_class3 = 0.0;
  std::size_t count_class1 = 0;
  std::size_t count_class2 = 0;
  std::size_t count_class3 = 0;

  bool has_empty_class() const {
    return count_class1 == 0 || count_class2 == 0 || count_class3 == 0;
  }
};

ClasswiseAccuracy classwise_accuracy(std::span<const int> predictions,
                                     std::span<const int> truths,
                                     std::span<const RegionTag> tags);

/// 0.6 * acc1 + 0.1 * acc2 + 0.3 * acc3. Weights of empty classes are
/// redistributed proportionally over the nonempty ones.
double ensemble_accuracy(const ClasswiseAccuracy& cw);

/// Final two-classifier score: arithmetic mean of the per-task ensembles.
double combined_ensemble(double ensemble_low, double ensemble_high);

struct TTestResult {
  double t_statistic = 0.0;
  std::size_t degrees_of_freedom = 0;
  double p_value = 1.0;            // two-sided
  double mean_delta = 0.0;
  bool degenerate_variance = false;  // nonzero mean with zero spread
};

/// Paired Student's t-test on per-repeat deltas. p is computed from the
/// regularized incomplete beta function to well below 1e-8.
TTestResult paired_t_test(std::span<const double> deltas);

/// Regularized incomplete beta I_x(a, b); exposed for verification.
double incomplete_beta(double a, double b, double x);

/// The four quantities tracked per repeat when comparing two models.
struct RepeatMetrics {
  double class1_low = 0.0;    // region-A positive accuracy, low task
  double class1_high = 0.0;   // region-A positive accuracy, high task
  double plain = 0.0;         // three-band cascade accuracy
  double ensemble = 0.0;      // combined ensemble accuracy
};

/// Elementwise knowledge - baseline per repeat; positive means the knowledge
/// model did better.
std::vector<RepeatMetrics> accuracy_delta_report(std::span<const RepeatMetrics> knowledge,
                                                 std::span<const RepeatMetrics> baseline);

}  // namespace bfsvm
