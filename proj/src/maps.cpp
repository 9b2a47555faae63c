#include "embax/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "embax/error.hpp"
#include "embax/generators.hpp"

namespace embax {

NodeMap::NodeMap(std::size_t target_n, std::vector<std::size_t> image)
    : target_n_(target_n), image_(std::move(image)) {
  for (std::size_t v = 0; v < image_.size(); ++v) {
    if (image_[v] >= target_n_) {
      throw Error(ErrorCode::OutOfRange, "node " + std::to_string(v + 1) + " maps to " +
                                             std::to_string(image_[v] + 1) + " of " + std::to_string(target_n_));
    }
  }
}

NodeMap NodeMap::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return NodeMap(n, std::move(image));
}

NodeMap NodeMap::after(const NodeMap& first) const {
  if (first.target_size() != source_size()) throw Error(ErrorCode::DimensionMismatch, "map composition");
  std::vector<std::size_t> image(first.source_size());
  for (std::size_t v = 0; v < image.size(); ++v) image[v] = image_[first(v)];
  return NodeMap(target_n_, std::move(image));
}

CodniResult is_codni(const NodeMap& m, const FeaturedNetwork& source, const FeaturedNetwork& target) {
  if (m.source_size() != source.size() || m.target_size() != target.size()) {
    throw Error(ErrorCode::DimensionMismatch, "map is " + std::to_string(m.source_size()) + "->" +
                                                  std::to_string(m.target_size()) + ", networks are " +
                                                  std::to_string(source.size()) + "->" +
                                                  std::to_string(target.size()));
  }
  if (!(source.space() == target.space())) {
    throw Error(ErrorCode::FeatureSpaceMismatch, "CoDNI is only defined within one feature space");
  }
  const std::size_t n = source.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t a = m(i), b = m(j);
      CodniViolation v{i, j, source.rho(i, j) < target.rho(a, b), source.d(i, j) < target.d(a, b)};
      if (v.feature_expanded || v.dissimilarity_increased) return {false, v};
    }
  }
  return {};
}

bool is_injective(const NodeMap& m) {
  std::vector<bool> hit(m.target_size(), false);
  for (std::size_t v : m.image()) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

NodeMap collapse_map(std::size_t n, std::size_t i, std::size_t j) {
  if (!(i < j && j < n)) {
    throw Error(ErrorCode::BadIndices, "need 1 <= i < j <= n, got i=" + std::to_string(i + 1) +
                                           " j=" + std::to_string(j + 1) + " n=" + std::to_string(n));
  }
  std::vector<std::size_t> image(n);
  for (std::size_t k = 0; k < n; ++k) image[k] = k <= i ? 0 : 1;
  return NodeMap(2, std::move(image));
}

NodeMap inclusion_map(std::size_t target_n, std::vector<std::size_t> subset) {
  return NodeMap(target_n, std::move(subset));
}

namespace {

std::vector<std::size_t> random_injection(Rng& rng, std::size_t n1, std::size_t n2) {
  std::vector<std::size_t> targets(n2);
  std::iota(targets.begin(), targets.end(), std::size_t{0});
  std::shuffle(targets.begin(), targets.end(), rng);
  targets.resize(n1);
  return targets;
}

}  // namespace

CodniInstance random_codni_instance(std::uint64_t seed, const CodniBounds& bounds) {
  if (bounds.min_n < 1 || bounds.max_n < bounds.min_n) {
    throw Error(ErrorCode::InvalidArgument, "size bounds must satisfy 1 <= min <= max");
  }
  Rng rng(seed);
  NetworkSampler sampler;
  sampler.min_n = bounds.min_n;
  sampler.max_n = bounds.max_n;

  const FeaturedNetwork source = random_network(rng, sampler);
  const std::size_t n1 = source.size();

  std::size_t n2 = 0;
  std::vector<std::size_t> image;
  if (bounds.injective) {
    n2 = uniform_index(rng, n1, std::max(n1, bounds.max_n));
    image = random_injection(rng, n1, n2);
  } else {
    n2 = uniform_index(rng, bounds.min_n, bounds.max_n);
    image.resize(n1);
    for (auto& t : image) t = uniform_index(rng, 0, n2 - 1);
  }
  NodeMap map(n2, image);

  std::vector<std::vector<std::size_t>> preimage(n2);
  for (std::size_t v = 0; v < n1; ++v) preimage[image[v]].push_back(v);

  // Dissimilarities between image nodes, then everything else.
  constexpr double kUnset = -1.0;
  Matrix d2(n2, kUnset);
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n2; ++k) {
    d2(k, k) = 0.0;
    for (std::size_t l = k + 1; l < n2; ++l) {
      if (preimage[k].empty() || preimage[l].empty()) continue;
      double bound = std::numeric_limits<double>::infinity();
      for (std::size_t a : preimage[k]) {
        for (std::size_t b : preimage[l]) bound = std::min(bound, source.d(a, b));
      }
      d2(k, l) = d2(l, k) = bound * unit_factor(rng);
      smallest = std::min(smallest, d2(k, l));
    }
  }
  if (!std::isfinite(smallest)) smallest = sampler.d_min;
  for (std::size_t k = 0; k < n2; ++k) {
    for (std::size_t l = k + 1; l < n2; ++l) {
      if (d2(k, l) == kUnset) d2(k, l) = d2(l, k) = smallest * unit_factor(rng);
    }
  }

  const FeatureSpace space = source.space();
  std::vector<Feature> features(n2);
  if (space.kind() == FeatureSpace::Kind::Point) {
    CodniInstance out{source, validate_network(d2, space, std::move(features)), map};
    return out;
  }

  std::vector<Feature> centroids(n2, Feature(space.dim(), 0.0));
  for (std::size_t k = 0; k < n2; ++k) {
    if (preimage[k].empty()) {
      centroids[k] = random_feature(rng, space);
      continue;
    }
    for (std::size_t a : preimage[k]) {
      for (std::size_t c = 0; c < space.dim(); ++c) centroids[k][c] += source.feature(a)[c];
    }
    for (auto& x : centroids[k]) x /= static_cast<double>(preimage[k].size());
  }

  double scale_cap = 1.0;
  for (std::size_t attempt = 0; attempt < bounds.max_retries; ++attempt) {
    const double scale = scale_cap * unit_factor(rng);
    for (std::size_t k = 0; k < n2; ++k) {
      features[k] = centroids[k];
      if (!preimage[k].empty()) {
        for (auto& x : features[k]) x *= scale;
      }
    }
    FeaturedNetwork target = validate_network(d2, space, features);
    if (is_codni(map, source, target)) return CodniInstance{source, std::move(target), map};
    scale_cap = scale;
  }
  throw Error(ErrorCode::GenerationFailure,
              "feature contraction not reached after " + std::to_string(bounds.max_retries) + " retries");
}

}  // namespace embax
