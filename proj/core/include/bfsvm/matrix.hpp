#pragma once

#include <cstddef>
#include <vector>

namespace bfsvm {

/// Dense square matrix, row-major. Sized for desk-scale problems (n <= 2000).
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  const double* row(std::size_t i) const { return data_.data() + i * n_; }
  const std::vector<double>& data() const noexcept { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

}  // namespace bfsvm
