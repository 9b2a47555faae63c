#include "embax/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "embax/error.hpp"

namespace embax {

Matrix PerturbationFamily::sample(const FeaturedNetwork& base, Rng& rng) const {
  const std::size_t n = base.size();
  if (i >= n || j >= n || i == j) throw Error(ErrorCode::BadIndices, "perturbation anchor pair");
  Matrix out = base.d();
  double largest = 0.0;
  for (double v : base.d().data()) largest = std::max(largest, v);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      if ((k == i && l == j) || (k == j && l == i)) continue;
      const double v = kind == Kind::Dij ? base.d(k, l) * uniform(rng, min_factor, max_factor)
                                         : fresh_scale * largest * unit_factor(rng);
      out(k, l) = out(l, k) = std::max(v, kind == Kind::Dij ? base.d(k, l) : 0.0);
    }
  }
  return out;
}

bool PerturbationFamily::contains(const FeaturedNetwork& base, const Matrix& candidate) const {
  const std::size_t n = base.size();
  if (candidate.size() != n || i >= n || j >= n || i == j) return false;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const double v = candidate(k, l);
      if (!std::isfinite(v) || v != candidate(l, k)) return false;
      if (k == l ? v != 0.0 : v <= 0.0) return false;
      if (kind == Kind::Dij && v < base.d(k, l)) return false;
    }
  }
  return candidate(i, j) == base.d(i, j);
}

void PerturbationFamily::require_member(const FeaturedNetwork& base, const Matrix& candidate) const {
  if (!contains(base, candidate)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("perturbation is not in the ") + (kind == Kind::Dij ? "Dij" : "Cij") + " family of (" +
                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }
}

}  // namespace embax
