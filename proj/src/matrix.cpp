#include "embax/matrix.hpp"

#include <cmath>
#include <ostream>

#include "embax/error.hpp"
#include "embax/ext_real.hpp"

namespace embax {

ExtReal::ExtReal(double finite_value) : value_(finite_value) {
  if (!std::isfinite(finite_value)) {
    throw Error(ErrorCode::NonFiniteEntry, "extended real built from a non-finite double");
  }
}

double ExtReal::value() const {
  if (infinite_) throw Error(ErrorCode::InvalidArgument, "value() on +inf");
  return value_;
}

std::ostream& operator<<(std::ostream& os, const ExtReal& x) {
  if (x.is_infinite()) return os << "inf";
  return os << x.value();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error(ErrorCode::MalformedMatrix, "matrix literal is not square");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::MalformedMatrix, "row " + std::to_string(i + 1) + " has " +
                                                  std::to_string(rows[i].size()) + " entries, expected " +
                                                  std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(row(i).begin(), row(i).end());
  return rows;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "frobenius_distance");
  double sum = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    const double diff = a.data()[k] - b.data()[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

}  // namespace embax
