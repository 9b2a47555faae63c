#include "embax/netcore.hpp"

#include <cmath>
#include <string>

#include "embax/error.hpp"

namespace embax {
namespace {

std::string at(std::size_t i, std::size_t j) {
  return "at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

FeatureSpace FeatureSpace::vector(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "vector feature space needs a positive dimension");
  return FeatureSpace(Kind::Vector, dim);
}

bool FeatureSpace::contains(const Feature& s) const noexcept {
  if (kind_ == Kind::Point) return s.empty();
  if (s.size() != dim_) return false;
  for (double x : s) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

void FeatureSpace::require_member(const Feature& s) const {
  if (!contains(s)) {
    throw Error(ErrorCode::DimensionMismatch,
                "feature of length " + std::to_string(s.size()) + " is not an element of " +
                    (kind_ == Kind::Point ? std::string("the point space")
                                          : "R^" + std::to_string(dim_)));
  }
}

double rho(const FeatureSpace& space, const Feature& s, const Feature& t) {
  space.require_member(s);
  space.require_member(t);
  if (space.kind() == FeatureSpace::Kind::Point) return 0.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double diff = s[k] - t[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double FeaturedNetwork::rho(std::size_t i, std::size_t j) const {
  return embax::rho(space_, features_[i], features_[j]);
}

FeaturedNetwork FeaturedNetwork::with_dissimilarities(const Matrix& d) const {
  FeaturedNetwork out = validate_network(d, space_, features_);
  out.origin_ = origin_;
  return out;
}

FeaturedNetwork validate_network(const Matrix& d, const FeatureSpace& space, std::vector<Feature> features) {
  const std::size_t n = d.size();
  if (n == 0) throw Error(ErrorCode::MalformedMatrix, "network needs at least one node");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = d(i, j);
      if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteEntry, at(i, j));
      if (i == j) {
        if (v != 0.0) throw Error(ErrorCode::NonzeroDiagonal, at(i, j));
      } else if (v <= 0.0) {
        throw Error(ErrorCode::NonpositiveOffDiagonal, at(i, j));
      } else if (v != d(j, i)) {
        throw Error(ErrorCode::AsymmetricMatrix, at(i, j));
      }
    }
  }
  if (features.size() != n) {
    throw Error(ErrorCode::FeatureLengthMismatch, std::to_string(features.size()) + " features for " +
                                                      std::to_string(n) + " nodes");
  }
  for (const auto& f : features) space.require_member(f);

  std::vector<std::size_t> origin(n);
  for (std::size_t k = 0; k < n; ++k) origin[k] = k;
  return FeaturedNetwork(d, space, std::move(features), std::move(origin));
}

FeaturedNetwork point_network(const Matrix& d) {
  return validate_network(d, FeatureSpace::point(), std::vector<Feature>(d.size()));
}

FeaturedNetwork restrict(const FeaturedNetwork& network, std::span<const std::size_t> subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "");
  const std::size_t n = network.size();
  std::vector<bool> seen(n, false);
  for (std::size_t v : subset) {
    if (v >= n) throw Error(ErrorCode::OutOfRange, "node " + std::to_string(v + 1));
    if (seen[v]) throw Error(ErrorCode::DuplicateNode, "node " + std::to_string(v + 1));
    seen[v] = true;
  }
  const std::size_t m = subset.size();
  Matrix d(m);
  std::vector<Feature> features(m);
  std::vector<std::size_t> origin(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) d(a, b) = network.d(subset[a], subset[b]);
    features[a] = network.feature(subset[a]);
    origin[a] = network.origin()[subset[a]];
  }
  return FeaturedNetwork(std::move(d), network.space(), std::move(features), std::move(origin));
}

Embedding::Embedding(std::size_t n, std::vector<ExtReal> phi) : n_(n), phi_(std::move(phi)) {
  if (phi_.size() != n_ * n_) {
    throw Error(ErrorCode::InvalidEmbedding, "phi has " + std::to_string(phi_.size()) +
                                                 " entries for " + std::to_string(n_) + " nodes");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (!((*this)(i, i) == ExtReal(0.0))) throw Error(ErrorCode::InvalidEmbedding, "nonzero diagonal " + at(i, i));
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i))) throw Error(ErrorCode::InvalidEmbedding, "asymmetric " + at(i, j));
      if ((*this)(i, j) < ExtReal(0.0)) throw Error(ErrorCode::InvalidEmbedding, "negative " + at(i, j));
    }
  }
}

Embedding Embedding::from_matrix(const Matrix& phi) {
  std::vector<ExtReal> values;
  values.reserve(phi.data().size());
  for (double v : phi.data()) values.emplace_back(v);
  return Embedding(phi.size(), std::move(values));
}

void check_embedding(const Embedding& e, std::size_t expected_n) {
  if (e.size() != expected_n) {
    throw Error(ErrorCode::InvalidEmbedding, "embedding on " + std::to_string(e.size()) +
                                                 " nodes, network has " + std::to_string(expected_n));
  }
  // The constructor already validated; rebuilding re-runs the same checks.
  Embedding copy(e.size(), e.values());
  (void)copy;
}

namespace {

void check_permutation(std::span<const std::size_t> perm, std::size_t n) {
  if (perm.size() != n) throw Error(ErrorCode::DimensionMismatch, "permutation length");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[p] = true;
  }
}

}  // namespace

FeaturedNetwork permute(const FeaturedNetwork& network, std::span<const std::size_t> perm) {
  const std::size_t n = network.size();
  check_permutation(perm, n);
  Matrix d(n);
  std::vector<Feature> features(n);
  for (std::size_t a = 0; a < n; ++a) {
    features[perm[a]] = network.feature(a);
    for (std::size_t b = 0; b < n; ++b) d(perm[a], perm[b]) = network.d(a, b);
  }
  return validate_network(d, network.space(), std::move(features));
}

Embedding permute(const Embedding& e, std::span<const std::size_t> perm) {
  const std::size_t n = e.size();
  check_permutation(perm, n);
  std::vector<ExtReal> phi(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) phi[perm[a] * n + perm[b]] = e(a, b);
  }
  return Embedding(n, std::move(phi));
}

}  // namespace embax
