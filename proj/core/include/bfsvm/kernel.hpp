#pragma once

#include <span>
#include <vector>

#include "bfsvm/matrix.hpp"

namespace bfsvm {

/// Gaussian RBF kernel parameters. gamma is the inverse squared length-scale.
struct KernelParams {
  double gamma = 1.0;

  explicit KernelParams(double g);
  KernelParams() = default;
};

/// K(x, y) = exp(-gamma * ||x - y||^2). Result lies in (0, 1], symmetric.
double rbf(std::span<const double> x, std::span<const double> y, const KernelParams& params);

/// Full kernel matrix G_ij = K(X_i, X_j): symmetric, unit diagonal, PSD.
/// Rows are computed independently (and in parallel for large n); the result
/// is byte-identical to serial construction.
SquareMatrix gram_matrix(const std::vector<std::vector<double>>& points,
                         const KernelParams& params);

}  // namespace bfsvm
