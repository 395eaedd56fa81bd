#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "bfsvm/errors.hpp"
#include "bfsvm/matrix.hpp"

namespace bfsvm {

// Dual QP with heterogeneous box constraints:
//
//   min_a  1/2 sum_ij a_i a_j y_i y_j G_ij  -  sum_i a_i
//   s.t.   sum_i a_i y_i = 0,   0 <= a_i <= U_i
//
// The per-sample upper bounds U_i are the channel through which region costs
// enter the classifier; everything here is agnostic to where they came from.

struct QpProblem {
  SquareMatrix gram;                  // symmetric, unit diagonal when built from rbf
  std::vector<double> labels;         // entries in {+1, -1}
  std::vector<double> upper_bounds;   // strictly positive, one per sample
  double tolerance = 1e-3;            // stopping threshold on the max KKT violation
  std::size_t max_passes = 0;         // pairwise updates; 0 means the 10*n^2 default

  std::size_t size() const noexcept { return labels.size(); }
  /// Throws StructuralError / ValidationError when an invariant is broken.
  void validate() const;
};

struct DualSolution {
  std::vector<double> alpha;
  double bias = 0.0;
  double objective = 0.0;            // dual objective sum(a) - 1/2 a'Qa (ascending form)
  std::size_t iterations = 0;
  double max_kkt_violation = 0.0;
};

struct KktReport {
  double max_violation = 0.0;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double relative_gap = 0.0;         // |primal - dual| / (1 + |dual|)
};

/// Thrown when the pass budget runs out; carries the best iterate so far.
class ConvergenceError : public Error {
 public:
  ConvergenceError(DualSolution best, double residual_violation)
      : Error("solver did not converge: residual KKT violation " +
              std::to_string(residual_violation)),
        best_(std::move(best)),
        residual_violation_(residual_violation) {}
  const DualSolution& best() const noexcept { return best_; }
  double residual_violation() const noexcept { return residual_violation_; }

 private:
  DualSolution best_;
  double residual_violation_;
};

/// Called after every pairwise update with (iteration, dual objective).
using IterationObserver = std::function<void(std::size_t, double)>;

/// SMO with maximal-violating-pair selection and analytic two-variable steps
/// clipped to the heterogeneous boxes. Deterministic: ties in the working-set
/// selection break toward the lowest index.
DualSolution solve_dual(const QpProblem& problem, const IterationObserver& observer = {});

/// Offset recovery: mean over free support vectors of y_i - sum_j a_j y_j G_ij,
/// or the midpoint of the KKT-feasible interval when every SV sits on a bound.
double compute_bias(const std::vector<double>& alpha, const QpProblem& problem);

/// Optimality diagnostics: hinge-form primal, dual objective, relative gap.
KktReport kkt_report(const DualSolution& solution, const QpProblem& problem);

}  // namespace bfsvm
