#pragma once

// Maps between node sets and the contractive, dissimilarity non-increasing
// (CoDNI) test.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "embax/netcore.hpp"

namespace embax {

/// Total function {0..source_n-1} -> {0..target_n-1}.
class NodeMap {
 public:
  /// Throws OutOfRange if an entry is >= target_n.
  NodeMap(std::size_t target_n, std::vector<std::size_t> image);

  static NodeMap identity(std::size_t n);

  std::size_t source_size() const noexcept { return image_.size(); }
  std::size_t target_size() const noexcept { return target_n_; }
  std::size_t operator()(std::size_t v) const { return image_[v]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }

  /// (*this) after `first`: v -> this(first(v)).
  NodeMap after(const NodeMap& first) const;

  bool operator==(const NodeMap&) const = default;

 private:
  std::size_t target_n_;
  std::vector<std::size_t> image_;
};

struct CodniViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  bool feature_expanded = false;        // rho(F1 i, F1 j) < rho(F2 m(i), F2 m(j))
  bool dissimilarity_increased = false; // d1(i,j) < d2(m(i), m(j))
};

struct CodniResult {
  bool holds = true;
  std::optional<CodniViolation> first_violation;  // lexicographic in (i, j)

  explicit operator bool() const noexcept { return holds; }
};

/// Errors: DimensionMismatch (map vs network sizes), FeatureSpaceMismatch.
CodniResult is_codni(const NodeMap& m, const FeaturedNetwork& source, const FeaturedNetwork& target);

bool is_injective(const NodeMap& m);

/// Collapse onto the two-node restriction {i, j}: nodes k <= i go
/// to 0 (i), nodes k > i go to 1 (j). Requires i < j < n, else BadIndices.
NodeMap collapse_map(std::size_t n, std::size_t i, std::size_t j);

/// Inclusion of restrict(network, subset) back into network.
NodeMap inclusion_map(std::size_t target_n, std::vector<std::size_t> subset);

struct CodniInstance {
  FeaturedNetwork source;
  FeaturedNetwork target;
  NodeMap map;
};

struct CodniBounds {
  std::size_t min_n = 2;
  std::size_t max_n = 6;
  bool injective = false;
  std::size_t max_retries = 100;
};

/// Random (N1, N2, m) with is_codni(m, N1, N2) guaranteed.
///
/// N1 is random. N2's dissimilarity between two image nodes is the smallest
/// d1 over their preimage pairs times a factor in (0, 1]; other pairs get a
/// fresh value no larger than the smallest such entry. Vector features of
/// image nodes are scaled centroids of their preimages, resampled (shrinking
/// the scale) until the contraction holds. Half of the instances use the
/// point space. Throws GenerationFailure after max_retries.
CodniInstance random_codni_instance(std::uint64_t seed, const CodniBounds& bounds = {});

}  // namespace embax
