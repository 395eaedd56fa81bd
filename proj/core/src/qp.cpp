#include "bfsvm/qp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace bfsvm {

namespace {

constexpr double kCurvatureFloor = 1e-12;

// Working-set membership. A sample can push the positive-label side of the
// equality constraint up (I_up) or down (I_low) depending on which bound it
// still has room to move away from.
inline bool in_up_set(double y, double a, double u) {
  return (y > 0.0) ? (a < u) : (a > 0.0);
}
inline bool in_low_set(double y, double a, double u) {
  return (y > 0.0) ? (a > 0.0) : (a < u);
}

struct ViolatingPair {
  std::ptrdiff_t up = -1;
  std::ptrdiff_t low = -1;
  double violation = -std::numeric_limits<double>::infinity();
};

// Maximal-violating pair: argmax over I_up and argmin over I_low of
// y_i - u_i expressed through the gradient (-y_i g_i). Lowest index wins ties.
ViolatingPair select_pair(const QpProblem& p, const std::vector<double>& alpha,
                          const std::vector<double>& grad) {
  const std::size_t n = p.size();
  double best_up = -std::numeric_limits<double>::infinity();
  double best_low = std::numeric_limits<double>::infinity();
  ViolatingPair pair;
  for (std::size_t k = 0; k < n; ++k) {
    const double f = -p.labels[k] * grad[k];
    if (in_up_set(p.labels[k], alpha[k], p.upper_bounds[k]) && f > best_up) {
      best_up = f;
      pair.up = static_cast<std::ptrdiff_t>(k);
    }
    if (in_low_set(p.labels[k], alpha[k], p.upper_bounds[k]) && f < best_low) {
      best_low = f;
      pair.low = static_cast<std::ptrdiff_t>(k);
    }
  }
  if (pair.up >= 0 && pair.low >= 0) pair.violation = best_up - best_low;
  return pair;
}

double dual_objective(const std::vector<double>& alpha, const std::vector<double>& grad) {
  double obj = 0.0;
  for (std::size_t k = 0; k < alpha.size(); ++k) obj += alpha[k] * (1.0 - grad[k]);
  return 0.5 * obj;
}

}  // namespace

void QpProblem::validate() const {
  const std::size_t n = labels.size();
  if (n == 0) throw StructuralError("qp: empty problem");
  if (gram.size() != n || upper_bounds.size() != n) {
    throw StructuralError("qp: gram/labels/bounds size mismatch");
  }
  if (!(tolerance > 0.0)) throw ValidationError("qp: tolerance must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] != 1.0 && labels[i] != -1.0) {
      throw ValidationError("qp: label at " + std::to_string(i) + " is not +/-1");
    }
    if (!(upper_bounds[i] > 0.0)) {
      throw ValidationError("qp: non-positive upper bound at " + std::to_string(i));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(gram(i, j) - gram(j, i)) > 1e-12) {
        throw StructuralError("qp: gram matrix not symmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
    }
  }
}

DualSolution solve_dual(const QpProblem& problem, const IterationObserver& observer) {
  problem.validate();
  const std::size_t n = problem.size();

  bool has_pos = false, has_neg = false;
  for (double y : problem.labels) (y > 0.0 ? has_pos : has_neg) = true;
  if (!has_pos || !has_neg) {
    throw DegenerateTaskError("qp: all labels identical, only feasible point is alpha = 0");
  }

  const std::size_t max_passes =
      problem.max_passes != 0 ? problem.max_passes : 10 * n * n;

  std::vector<double> alpha(n, 0.0);
  std::vector<double> grad(n, -1.0);  // gradient of the minimized form at alpha = 0

  std::size_t iter = 0;
  double violation = 0.0;
  bool converged = false;

  while (true) {
    const ViolatingPair pair = select_pair(problem, alpha, grad);
    violation = std::max(0.0, pair.violation);
    if (pair.up < 0 || pair.low < 0 || pair.violation <= problem.tolerance) {
      converged = true;
      break;
    }
    if (iter >= max_passes) break;

    const auto i = static_cast<std::size_t>(pair.up);
    const auto j = static_cast<std::size_t>(pair.low);
    const double yi = problem.labels[i];
    const double yj = problem.labels[j];

    // Analytic minimizer along the feasible direction (d_i, d_j) = (y_i, -y_j),
    // then clipped so both coordinates stay inside their boxes.
    const double curvature = std::max(
        problem.gram(i, i) + problem.gram(j, j) - 2.0 * problem.gram(i, j), kCurvatureFloor);
    double step = pair.violation / curvature;
    const double room_i = (yi > 0.0) ? problem.upper_bounds[i] - alpha[i] : alpha[i];
    const double room_j = (yj > 0.0) ? alpha[j] : problem.upper_bounds[j] - alpha[j];
    step = std::min({step, room_i, room_j});

    alpha[i] = std::clamp(alpha[i] + yi * step, 0.0, problem.upper_bounds[i]);
    alpha[j] = std::clamp(alpha[j] - yj * step, 0.0, problem.upper_bounds[j]);

    for (std::size_t k = 0; k < n; ++k) {
      grad[k] += step * problem.labels[k] * (problem.gram(k, i) - problem.gram(k, j));
    }

    ++iter;
    if (observer) observer(iter, dual_objective(alpha, grad));
  }

  DualSolution solution;
  solution.alpha = std::move(alpha);
  solution.iterations = iter;
  solution.max_kkt_violation = violation;
  solution.objective = dual_objective(solution.alpha, grad);
  solution.bias = compute_bias(solution.alpha, problem);

  if (!converged) {
    throw ConvergenceError(std::move(solution), violation);
  }
  return solution;
}

double compute_bias(const std::vector<double>& alpha, const QpProblem& problem) {
  const std::size_t n = problem.size();
  if (alpha.size() != n) throw StructuralError("compute_bias: alpha size mismatch");

  bool any_nonzero = false;
  for (double a : alpha) {
    if (a > 0.0) {
      any_nonzero = true;
      break;
    }
  }
  if (!any_nonzero) {
    throw DegenerateTaskError("compute_bias: alpha is identically zero, no support vectors");
  }

  double free_sum = 0.0;
  std::size_t free_count = 0;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < n; ++i) {
    double margin = 0.0;  // sum_j a_j y_j G_ij
    for (std::size_t j = 0; j < n; ++j) {
      if (alpha[j] != 0.0) margin += alpha[j] * problem.labels[j] * problem.gram(i, j);
    }
    const double target = problem.labels[i] - margin;
    const bool at_zero = alpha[i] <= 0.0;
    const bool at_upper = alpha[i] >= problem.upper_bounds[i];
    if (!at_zero && !at_upper) {
      free_sum += target;
      ++free_count;
    } else if ((at_zero && problem.labels[i] > 0.0) || (at_upper && problem.labels[i] < 0.0)) {
      lo = std::max(lo, target);
    } else {
      hi = std::min(hi, target);
    }
  }

  if (free_count > 0) return free_sum / static_cast<double>(free_count);
  if (std::isinf(lo)) return hi;
  if (std::isinf(hi)) return lo;
  return 0.5 * (lo + hi);
}

KktReport kkt_report(const DualSolution& solution, const QpProblem& problem) {
  const std::size_t n = problem.size();
  const std::vector<double>& alpha = solution.alpha;

  std::vector<double> margins(n);  // sum_j a_j y_j G_ij, decision value without bias
  std::vector<double> grad(n);
  double norm_w2 = 0.0;            // a' (yy' o G) a, the kernel-space ||w||^2
  for (std::size_t i = 0; i < n; ++i) {
    double margin = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (alpha[j] != 0.0) margin += alpha[j] * problem.labels[j] * problem.gram(i, j);
    }
    margins[i] = margin;
    grad[i] = problem.labels[i] * margin - 1.0;
    norm_w2 += alpha[i] * problem.labels[i] * margin;
  }

  // Primal with hinge slacks xi_i = (1 - y_i f(x_i))_+, each weighted by its
  // sample's bound.
  double hinge = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double slack = 1.0 - problem.labels[i] * (margins[i] + solution.bias);
    hinge += problem.upper_bounds[i] * std::max(0.0, slack);
  }

  double sum_alpha = 0.0;
  for (double a : alpha) sum_alpha += a;

  KktReport report;
  report.primal_objective = 0.5 * norm_w2 + hinge;
  report.dual_objective = sum_alpha - 0.5 * norm_w2;
  report.relative_gap = std::abs(report.primal_objective - report.dual_objective) /
                        (1.0 + std::abs(report.dual_objective));

  const ViolatingPair pair = select_pair(problem, alpha, grad);
  report.max_violation = std::max(0.0, pair.violation);
  return report;
}

}  // namespace bfsvm
