#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace embax {

/// Dense square row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<const double> data() const noexcept { return data_; }

  std::vector<std::vector<double>> to_rows() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

double frobenius_distance(const Matrix& a, const Matrix& b);

}  // namespace embax
