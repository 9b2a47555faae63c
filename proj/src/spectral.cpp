#include "embax/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "embax/error.hpp"

namespace embax {

double kappa(const KernelSpec& kernel, double x, const FeatureSpace& space, const Feature& s, const Feature& t) {
  if (!(x >= 0.0)) throw Error(ErrorCode::InvalidArgument, "kernel argument must be nonnegative");
  if (!space.contains(s) || !space.contains(t)) {
    throw Error(ErrorCode::FeatureSpaceMismatch, "kernel features are not in the network's feature space");
  }
  switch (kernel.form) {
    case KernelSpec::Form::ExpSum:
      return std::exp(-(x + rho(space, s, t)));
  }
  return 0.0;
}

double kappa_inverse(const KernelSpec& kernel, double value, const FeatureSpace& space, const Feature& s,
                     const Feature& t) {
  const double top = kappa(kernel, 0.0, space, s, t);
  if (!(value > 0.0 && value <= top)) {
    throw Error(ErrorCode::KernelNotInvertibleAtValue,
                "requested " + std::to_string(value) + ", attainable range is (0, " + std::to_string(top) + "]");
  }
  switch (kernel.form) {
    case KernelSpec::Form::ExpSum:
      return std::max(0.0, -std::log(value) - rho(space, s, t));
  }
  return 0.0;
}

void PowerIterSpec::validate() const {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "power iteration tol must be positive");
  if (max_iter < 1) throw Error(ErrorCode::InvalidArgument, "power iteration max_iter must be >= 1");
}

namespace {

constexpr double kNonUniqueGap = 1e-6;
// Differences below this are dominated by rounding and say nothing about the gap.
constexpr double kGapMeasurementFloor = 1e-9;

std::vector<double> multiply(const Matrix& a, const std::vector<double>& x) {
  const std::size_t n = a.size();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = a.row(i);
    y[i] = std::inner_product(row.begin(), row.end(), x.begin(), 0.0);
  }
  return y;
}

double norm2(const std::vector<double>& x) { return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0)); }

}  // namespace

EigenDiagnostics leading_eigenpair(const Matrix& a, const PowerIterSpec& spec) {
  spec.validate();
  const std::size_t n = a.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty matrix");

  // Gershgorin discs bound the spectrum to [lower, upper]. Shifting by -lower
  // makes every eigenvalue of the iterated matrix nonnegative. When the discs
  // pin the spectrum to one point the matrix is a multiple of I and needs no shift.
  double lower = std::numeric_limits<double>::infinity();
  double upper = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) radius += std::abs(a(i, j));
    }
    lower = std::min(lower, a(i, i) - radius);
    upper = std::max(upper, a(i, i) + radius);
  }
  if (upper <= 0.0) throw Error(ErrorCode::NonpositiveLeadingEigenvalue, "spectrum bounded above by 0");

  EigenDiagnostics out;
  out.shift = upper > lower ? -lower : 0.0;

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> jitter(0.0, 0.01);
  std::vector<double> x(n);
  for (auto& v : x) v = 1.0 + jitter(rng);
  {
    const double nx = norm2(x);
    for (auto& v : x) v /= nx;
  }

  bool converged = false;
  double previous_diff = 0.0;
  std::size_t it = 0;
  while (it < spec.max_iter) {
    ++it;
    std::vector<double> y = multiply(a, x);
    for (std::size_t i = 0; i < n; ++i) y[i] += out.shift * x[i];
    const double ny = norm2(y);
    if (ny == 0.0) throw Error(ErrorCode::NonpositiveLeadingEigenvalue, "iterate collapsed to zero");
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] /= ny;
      diff = std::max(diff, std::abs(y[i] - x[i]));
    }
    if (previous_diff > kGapMeasurementFloor && diff > 0.0 && it > 2) {
      out.gap_estimate = 1.0 - diff / previous_diff;
    }
    previous_diff = diff;
    x = std::move(y);
    if (diff < spec.tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw Error(ErrorCode::PowerIterationDiverged,
                "no convergence to tol " + std::to_string(spec.tol) + " in " + std::to_string(spec.max_iter) +
                    " iterations");
  }

  if (std::accumulate(x.begin(), x.end(), 0.0) < 0.0) {
    for (auto& v : x) v = -v;
  }
  const std::vector<double> ax = multiply(a, x);
  out.lambda = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
  if (!(out.lambda > 0.0)) {
    throw Error(ErrorCode::NonpositiveLeadingEigenvalue, "leading eigenvalue " + std::to_string(out.lambda));
  }
  for (std::size_t i = 0; i < n; ++i) out.residual = std::max(out.residual, std::abs(ax[i] - out.lambda * x[i]));
  out.iterations = it;
  out.u = std::move(x);
  out.non_unique_warning = out.gap_estimate.has_value() && *out.gap_estimate < kNonUniqueGap;
  return out;
}

}  // namespace embax
