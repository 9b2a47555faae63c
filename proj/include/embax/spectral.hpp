#pragma once

// Kernels turning dissimilarities into edge weights, and the power iteration
// used by the eigenvector-centrality embedder.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "embax/matrix.hpp"
#include "embax/netcore.hpp"

namespace embax {

/// kappa(x; s, t) for a dissimilarity x >= 0 between nodes with features s, t.
///
/// ExpSum is exp(-(x + rho(s, t))): equal to 1 at x = 0 on equal features,
/// symmetric, positive, decreasing in x and in rho, vanishing as x grows.
struct KernelSpec {
  enum class Form { ExpSum };
  Form form = Form::ExpSum;

  bool operator==(const KernelSpec&) const = default;
};

/// Errors: FeatureSpaceMismatch (s or t not in space), InvalidArgument (x < 0).
double kappa(const KernelSpec& kernel, double x, const FeatureSpace& space, const Feature& s, const Feature& t);

/// The x >= 0 with kappa(x; s, t) == value. KernelNotInvertibleAtValue when
/// value is outside (0, kappa(0; s, t)].
double kappa_inverse(const KernelSpec& kernel, double value, const FeatureSpace& space, const Feature& s,
                     const Feature& t);

struct PowerIterSpec {
  double tol = 1e-12;  // on the infinity norm of successive normalized iterates
  std::size_t max_iter = 10'000;
  std::uint64_t seed = 0;  // jitter of the all-ones start vector

  /// Throws InvalidArgument unless tol > 0 and max_iter >= 1.
  void validate() const;
};

struct EigenDiagnostics {
  double lambda = 0.0;
  std::vector<double> u;  // unit length, nonnegative entry sum
  std::size_t iterations = 0;
  double residual = 0.0;  // ||A u - lambda u||_inf
  double shift = 0.0;
  /// 1 - observed contraction ratio of successive iterate differences, when
  /// the run lasted long enough to measure one.
  std::optional<double> gap_estimate;
  bool non_unique_warning = false;  // gap_estimate below 1e-6
};

/// Leading eigenpair of a symmetric matrix by power iteration on A + shift*I.
/// The shift is minus the Gershgorin lower bound of the spectrum, so every
/// shifted eigenvalue is nonnegative and the iteration cannot oscillate
/// between +lambda and -lambda. Eigenvalue is the Rayleigh quotient of the
/// final iterate.
///
/// Errors: PowerIterationDiverged, NonpositiveLeadingEigenvalue.
EigenDiagnostics leading_eigenpair(const Matrix& a, const PowerIterSpec& spec);

}  // namespace embax
