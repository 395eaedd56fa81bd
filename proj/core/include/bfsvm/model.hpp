#pragma once

#include <span>
#include <vector>

#include "bfsvm/kernel.hpp"
#include "bfsvm/knowledge.hpp"
#include "bfsvm/qp.hpp"
#include "bfsvm/sample.hpp"

namespace bfsvm {

/// Misclassification cost weights. c_minus applies to positives, c_plus to
/// negatives, and c_hat multiplies the cost of positives inside the rule
/// region. The paper's size ordering c- >= c+ > 0, c_hat >= 1 is enforced.
struct PenaltyScheme {
  double c_minus = 1.0;
  double c_plus = 1.0;
  double c_hat = 1.0;

  PenaltyScheme(double cm, double cp, double ch);

  /// Equal costs everywhere: the plain soft-margin machine.
  static PenaltyScheme uniform(double c = 1.0) { return {c, c, 1.0}; }
};

/// Dual box bound for one region under a scheme:
/// R1 -> c- * c_hat, R2 -> c-, R3 -> c+.
double bound_for(RegionTag tag, const PenaltyScheme& scheme);

/// Per-sample dual upper bounds; every sample must already carry a RegionTag.
std::vector<double> assign_bounds(std::span<const Sample> samples, const PenaltyScheme& scheme);

struct TrainedModel {
  std::vector<std::vector<double>> support_vectors;
  std::vector<double> coefficients;   // alpha_i * y_i for retained SVs
  double bias = 0.0;
  KernelParams kernel;
  PenaltyScheme scheme = PenaltyScheme::uniform();
  KnowledgeRule rule{0.5, RuleDirection::AtOrBelow};
  KktReport training_diagnostics;
};

struct TrainOptions {
  double kkt_tolerance = 1e-3;   // solver stopping threshold
  double gap_target = 1e-3;      // required relative primal-dual gap
  std::size_t max_passes = 0;    // 0 = solver default
};

/// Trains the weighted model on region-tagged samples. The rule is carried
/// along as model metadata (it determined the tags upstream). The solve is
/// re-run at a tighter tolerance if the duality gap misses gap_target.
TrainedModel train(std::span<const Sample> samples, const PenaltyScheme& scheme,
                   const KernelParams& kernel, const KnowledgeRule& rule,
                   const TrainOptions& options = {});

/// sum_i coeff_i * K(sv_i, x) + bias.
double decision_value(const TrainedModel& model, std::span<const double> x);

/// Sign of the decision value; exact zero counts as +1 (missing a positive
/// is the costlier mistake in this application).
int predict(const TrainedModel& model, std::span<const double> x);

}  // namespace bfsvm
