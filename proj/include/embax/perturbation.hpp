#pragma once

#include <cstddef>

#include "embax/generators.hpp"
#include "embax/matrix.hpp"
#include "embax/netcore.hpp"

namespace embax {

/// Perturbations of a network's dissimilarities that keep d(i, j) fixed.
///
/// Dij: every other entry may only grow. Sampled by scaling each other entry
/// by an independent factor in [min_factor, max_factor].
/// Cij: every other entry is arbitrary. Sampled fresh from
/// (0, fresh_scale * max d].
struct PerturbationFamily {
  enum class Kind { Dij, Cij };

  Kind kind = Kind::Dij;
  std::size_t i = 0;
  std::size_t j = 1;
  double min_factor = 1.0;
  double max_factor = 3.0;
  double fresh_scale = 2.0;

  Matrix sample(const FeaturedNetwork& base, Rng& rng) const;

  /// Membership test: a valid dissimilarity matrix on the same node set, with
  /// d'(i, j) == d(i, j) and, for Dij, d' >= d entrywise.
  bool contains(const FeaturedNetwork& base, const Matrix& candidate) const;

  /// Throws InvalidArgument when !contains(base, candidate).
  void require_member(const FeaturedNetwork& base, const Matrix& candidate) const;
};

}  // namespace embax
