#include "bfsvm/kernel.hpp"

#include <cmath>
#include <string>
#include <thread>

#include "bfsvm/errors.hpp"

namespace bfsvm {

KernelParams::KernelParams(double g) : gamma(g) {
  if (!(g > 0.0)) {
    throw ValidationError("kernel gamma must be positive, got " + std::to_string(g));
  }
}

double rbf(std::span<const double> x, std::span<const double> y, const KernelParams& params) {
  if (x.size() != y.size()) {
    throw StructuralError("rbf: dimension mismatch (" + std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()) + ")");
  }
  double dist2 = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double d = x[k] - y[k];
    dist2 += d * d;
  }
  return std::exp(-params.gamma * dist2);
}

namespace {

void fill_rows(const std::vector<std::vector<double>>& points, const KernelParams& params,
               SquareMatrix& gram, std::size_t begin, std::size_t end) {
  const std::size_t n = points.size();
  for (std::size_t i = begin; i < end; ++i) {
    gram(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      gram(i, j) = rbf(points[i], points[j], params);
    }
  }
}

}  // namespace

SquareMatrix gram_matrix(const std::vector<std::vector<double>>& points,
                         const KernelParams& params) {
  const std::size_t n = points.size();
  if (n == 0) throw StructuralError("gram_matrix: empty point set");
  const std::size_t dim = points.front().size();
  for (std::size_t i = 1; i < n; ++i) {
    if (points[i].size() != dim) {
      throw StructuralError("gram_matrix: ragged input at row " + std::to_string(i));
    }
  }

  SquareMatrix gram(n);
  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t workers = (n >= 256 && hw > 1) ? hw : 1;
  if (workers == 1) {
    fill_rows(points, params, gram, 0, n);
  } else {
    // Each worker owns a disjoint row range; entries are pure functions of
    // (i, j), so the assembled matrix matches the serial one bit for bit.
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(fill_rows, std::cref(points), std::cref(params), std::ref(gram), begin,
                        end);
    }
    for (auto& t : pool) t.join();
  }
  // Mirror the strict upper triangle.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) gram(j, i) = gram(i, j);
  }
  return gram;
}

}  // namespace bfsvm
