#include "bfsvm/metrics.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace bfsvm {

ClasswiseAccuracy classwise_accuracy(std::span<const int> predictions,
                                     std::span<const int> truths,
                                     std::span<const RegionTag> tags) {
  if (predictions.size() != truths.size() || truths.size() != tags.size()) {
    throw StructuralError("classwise_accuracy: length mismatch");
  }
  std::size_t correct[3] = {0, 0, 0};
  std::size_t count[3] = {0, 0, 0};
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const auto c = static_cast<std::size_t>(tags[i]);
    ++count[c];
    if (predictions[i] == truths[i]) ++correct[c];
  }
  ClasswiseAccuracy cw;
  cw.count_class1 = count[0];
  cw.count_class2 = count[1];
  cw.count_class3 = count[2];
  cw.acc_class1 = count[0] ? static_cast<double>(correct[0]) / count[0] : 0.0;
  cw.acc_class2 = count[1] ? static_cast<double>(correct[1]) / count[1] : 0.0;
  cw.acc_class3 = count[2] ? static_cast<double>(correct[2]) / count[2] : 0.0;
  return cw;
}

double ensemble_accuracy(const ClasswiseAccuracy& cw) {
  const double weights[3] = {kWeightClass1, kWeightClass2, kWeightClass3};
  const double accs[3] = {cw.acc_class1, cw.acc_class2, cw.acc_class3};
  const std::size_t counts[3] = {cw.count_class1, cw.count_class2, cw.count_class3};

  double live_weight = 0.0;
  for (int c = 0; c < 3; ++c) {
    if (counts[c] > 0) live_weight += weights[c];
  }
  if (live_weight == 0.0) {
    throw StructuralError("ensemble_accuracy: all classes empty");
  }
  double score = 0.0;
  for (int c = 0; c < 3; ++c) {
    if (counts[c] > 0) score += weights[c] / live_weight * accs[c];
  }
  return score;
}

double combined_ensemble(double ensemble_low, double ensemble_high) {
  return 0.5 * (ensemble_low + ensemble_high);
}

namespace {

// Continued-fraction kernel of the regularized incomplete beta (Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 500;
  constexpr double kEpsilon = 1e-15;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEpsilon) break;
  }
  return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  // Use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) on the slow side.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

TTestResult paired_t_test(std::span<const double> deltas) {
  const std::size_t n = deltas.size();
  if (n < 2) throw StructuralError("paired_t_test: need at least 2 deltas");

  double mean = 0.0;
  for (double d : deltas) mean += d;
  mean /= static_cast<double>(n);

  double ss = 0.0;
  for (double d : deltas) ss += (d - mean) * (d - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  TTestResult result;
  result.degrees_of_freedom = n - 1;
  result.mean_delta = mean;

  if (sd == 0.0) {
    if (mean == 0.0) {
      result.t_statistic = 0.0;
      result.p_value = 1.0;
    } else {
      result.degenerate_variance = true;
      result.t_statistic = mean > 0.0 ? std::numeric_limits<double>::infinity()
                                      : -std::numeric_limits<double>::infinity();
      result.p_value = 0.0;
    }
    return result;
  }

  const double t = mean / (sd / std::sqrt(static_cast<double>(n)));
  result.t_statistic = t;
  const double df = static_cast<double>(n - 1);
  // Two-sided: P(|T| > t) = I_{df/(df+t^2)}(df/2, 1/2).
  result.p_value = incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
  return result;
}

std::vector<RepeatMetrics> accuracy_delta_report(std::span<const RepeatMetrics> knowledge,
                                                 std::span<const RepeatMetrics> baseline) {
  if (knowledge.size() != baseline.size()) {
    throw StructuralError("accuracy_delta_report: unpaired repeat counts (" +
                          std::to_string(knowledge.size()) + " vs " +
                          std::to_string(baseline.size()) + ")");
  }
  std::vector<RepeatMetrics> deltas;
  deltas.reserve(knowledge.size());
  for (std::size_t r = 0; r < knowledge.size(); ++r) {
    deltas.push_back({knowledge[r].class1_low - baseline[r].class1_low,
                      knowledge[r].class1_high - baseline[r].class1_high,
                      knowledge[r].plain - baseline[r].plain,
                      knowledge[r].ensemble - baseline[r].ensemble});
  }
  return deltas;
}

}  // namespace bfsvm
