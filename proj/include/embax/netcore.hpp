#pragma once

// Featured dissimilarity networks, feature spaces and the pseudodissimilarity
// spaces that embedders emit.
//
// Node indices are 0-based throughout the C++ API. File formats and
// human-readable messages use 1-based labels.

#include <cstddef>
#include <span>
#include <vector>

#include "embax/ext_real.hpp"
#include "embax/matrix.hpp"

namespace embax {

using Feature = std::vector<double>;

/// The dissimilarity space node features live in.
///
/// PointSpace has exactly one element, represented by the empty vector.
/// VectorSpace(dim) is R^dim with the Euclidean distance.
class FeatureSpace {
 public:
  enum class Kind { Point, Vector };

  static FeatureSpace point() { return FeatureSpace(Kind::Point, 0); }
  /// dim must be positive.
  static FeatureSpace vector(std::size_t dim);

  Kind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return dim_; }

  bool contains(const Feature& s) const noexcept;
  /// Throws DimensionMismatch unless contains(s).
  void require_member(const Feature& s) const;

  bool operator==(const FeatureSpace&) const = default;

 private:
  FeatureSpace(Kind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

  Kind kind_;
  std::size_t dim_;
};

/// Dissimilarity between two elements of `space`. Throws DimensionMismatch.
double rho(const FeatureSpace& space, const Feature& s, const Feature& t);

/// A validated (V, d, F) triple. Immutable once built.
class FeaturedNetwork {
 public:
  std::size_t size() const noexcept { return d_.size(); }
  const Matrix& d() const noexcept { return d_; }
  double d(std::size_t i, std::size_t j) const { return d_(i, j); }
  const FeatureSpace& space() const noexcept { return space_; }
  const std::vector<Feature>& features() const noexcept { return features_; }
  const Feature& feature(std::size_t i) const { return features_[i]; }
  double rho(std::size_t i, std::size_t j) const;

  /// Node k of this network is node origin()[k] of the network it was
  /// restricted from; identity for networks built directly.
  const std::vector<std::size_t>& origin() const noexcept { return origin_; }

  /// Same node set and features, new dissimilarities (validated).
  FeaturedNetwork with_dissimilarities(const Matrix& d) const;

  bool operator==(const FeaturedNetwork& other) const {
    return d_ == other.d_ && space_ == other.space_ && features_ == other.features_;
  }

 private:
  friend FeaturedNetwork validate_network(const Matrix&, const FeatureSpace&, std::vector<Feature>);
  friend FeaturedNetwork restrict(const FeaturedNetwork&, std::span<const std::size_t>);

  FeaturedNetwork(Matrix d, FeatureSpace space, std::vector<Feature> features,
                  std::vector<std::size_t> origin)
      : d_(std::move(d)), space_(space), features_(std::move(features)), origin_(std::move(origin)) {}

  Matrix d_;
  FeatureSpace space_;
  std::vector<Feature> features_;
  std::vector<std::size_t> origin_;
};

/// Checks entries in row-major order and reports the first violation:
/// NonFiniteEntry, NonzeroDiagonal, NonpositiveOffDiagonal, AsymmetricMatrix.
/// Feature problems raise FeatureLengthMismatch / DimensionMismatch.
FeaturedNetwork validate_network(const Matrix& d, const FeatureSpace& space, std::vector<Feature> features);

/// Convenience for feature-blind networks: every node carries the point.
FeaturedNetwork point_network(const Matrix& d);

/// Sub-network on `subset` (in the given order). Errors: EmptySubset,
/// DuplicateNode, OutOfRange.
FeaturedNetwork restrict(const FeaturedNetwork& network, std::span<const std::size_t> subset);

/// Node set with a pseudodissimilarity: zero diagonal, symmetric, values in
/// [0, +inf]. Off-diagonal zeros and +inf are allowed.
class Embedding {
 public:
  /// Validates the invariants; throws Error{InvalidEmbedding}.
  Embedding(std::size_t n, std::vector<ExtReal> phi);
  /// All finite entries.
  static Embedding from_matrix(const Matrix& phi);

  std::size_t size() const noexcept { return n_; }
  const ExtReal& operator()(std::size_t i, std::size_t j) const { return phi_[i * n_ + j]; }
  const std::vector<ExtReal>& values() const noexcept { return phi_; }

  bool operator==(const Embedding&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExtReal> phi_;
};

/// Re-checks the Embedding invariants and that it lives on `expected_n`
/// nodes. Throws Error{InvalidEmbedding}.
void check_embedding(const Embedding& e, std::size_t expected_n);

/// Relabel so that node perm[k] of the result is node k of the input.
FeaturedNetwork permute(const FeaturedNetwork& network, std::span<const std::size_t> perm);
Embedding permute(const Embedding& e, std::span<const std::size_t> perm);

}  // namespace embax
