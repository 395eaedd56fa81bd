#include "bfsvm/model.hpp"

#include <cmath>
#include <string>

namespace bfsvm {

namespace {
constexpr double kSupportThreshold = 1e-8;  // noise floor below solver tolerance
}

PenaltyScheme::PenaltyScheme(double cm, double cp, double ch)
    : c_minus(cm), c_plus(cp), c_hat(ch) {
  if (!(cp > 0.0) || !(cm >= cp)) {
    throw ValidationError("penalty scheme requires c_minus >= c_plus > 0");
  }
  if (!(ch >= 1.0)) {
    throw ValidationError("penalty scheme requires c_hat >= 1");
  }
}

double bound_for(RegionTag tag, const PenaltyScheme& scheme) {
  switch (tag) {
    case RegionTag::R1: return scheme.c_minus * scheme.c_hat;
    case RegionTag::R2: return scheme.c_minus;
    case RegionTag::R3: return scheme.c_plus;
  }
  throw ValidationError("unknown region tag");
}

std::vector<double> assign_bounds(std::span<const Sample> samples, const PenaltyScheme& scheme) {
  std::vector<double> bounds;
  bounds.reserve(samples.size());
  for (const Sample& s : samples) bounds.push_back(bound_for(s.region, scheme));
  return bounds;
}

TrainedModel train(std::span<const Sample> samples, const PenaltyScheme& scheme,
                   const KernelParams& kernel, const KnowledgeRule& rule,
                   const TrainOptions& options) {
  if (samples.empty()) throw StructuralError("train: no samples");

  std::vector<std::vector<double>> points;
  points.reserve(samples.size());
  std::vector<double> labels;
  labels.reserve(samples.size());
  for (const Sample& s : samples) {
    points.push_back(s.features);
    labels.push_back(static_cast<double>(s.label));
  }

  QpProblem problem;
  problem.gram = gram_matrix(points, kernel);
  problem.labels = std::move(labels);
  problem.upper_bounds = assign_bounds(samples, scheme);
  problem.tolerance = options.kkt_tolerance;
  problem.max_passes = options.max_passes;

  // The solver's stopping rule bounds the KKT violation, not the duality gap
  // directly; when the gap target is missed, solve again tighter.
  DualSolution solution = solve_dual(problem);
  KktReport report = kkt_report(solution, problem);
  while (report.relative_gap > options.gap_target && problem.tolerance > 1e-9) {
    problem.tolerance /= 10.0;
    solution = solve_dual(problem);
    report = kkt_report(solution, problem);
  }

  TrainedModel model;
  model.kernel = kernel;
  model.scheme = scheme;
  model.rule = rule;
  model.bias = solution.bias;
  model.training_diagnostics = report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (solution.alpha[i] > kSupportThreshold) {
      model.support_vectors.push_back(points[i]);
      model.coefficients.push_back(solution.alpha[i] * problem.labels[i]);
    }
  }
  if (model.support_vectors.empty()) {
    throw DegenerateTaskError("train: solution has no support vectors");
  }
  return model;
}

double decision_value(const TrainedModel& model, std::span<const double> x) {
  double value = model.bias;
  for (std::size_t i = 0; i < model.support_vectors.size(); ++i) {
    value += model.coefficients[i] * rbf(model.support_vectors[i], x, model.kernel);
  }
  return value;
}

int predict(const TrainedModel& model, std::span<const double> x) {
  return decision_value(model, x) >= 0.0 ? +1 : -1;
}

}  // namespace bfsvm
