#include "embax/generators.hpp"

#include "embax/error.hpp"

namespace embax {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double unit_factor(Rng& rng) { return 1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi_inclusive) {
  if (hi_inclusive < lo) throw Error(ErrorCode::InvalidArgument, "empty index range");
  return std::uniform_int_distribution<std::size_t>(lo, hi_inclusive)(rng);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ stream) ^ index);
}

FeatureSpace random_space(Rng& rng, const NetworkSampler& sampler) {
  bool vector = sampler.features == FeatureMode::Vector;
  if (sampler.features == FeatureMode::Mixed) vector = std::bernoulli_distribution(0.5)(rng);
  if (!vector) return FeatureSpace::point();
  return FeatureSpace::vector(uniform_index(rng, 1, sampler.max_dim));
}

Feature random_feature(Rng& rng, const FeatureSpace& space) {
  Feature f(space.dim());
  for (auto& x : f) x = uniform(rng, -1.0, 1.0);
  return f;
}

FeaturedNetwork random_network(Rng& rng, std::size_t n, const FeatureSpace& space, const NetworkSampler& sampler) {
  Matrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d(i, j) = d(j, i) = uniform(rng, sampler.d_min, sampler.d_max);
    }
  }
  std::vector<Feature> features(n);
  for (auto& f : features) f = random_feature(rng, space);
  return validate_network(d, space, std::move(features));
}

FeaturedNetwork random_network(Rng& rng, const NetworkSampler& sampler) {
  const std::size_t n = uniform_index(rng, sampler.min_n, sampler.max_n);
  const FeatureSpace space = random_space(rng, sampler);
  return random_network(rng, n, space, sampler);
}

}  // namespace embax
