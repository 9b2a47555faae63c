#pragma once

// Seeded random instances used by the audits and the property tests.

#include <cstddef>
#include <cstdint>
#include <random>

#include "embax/netcore.hpp"

namespace embax {

using Rng = std::mt19937_64;

enum class FeatureMode { Point, Vector, Mixed };

struct NetworkSampler {
  std::size_t min_n = 3;
  std::size_t max_n = 7;
  double d_min = 0.5;
  double d_max = 5.0;
  FeatureMode features = FeatureMode::Mixed;
  std::size_t max_dim = 3;
};

/// Uniform in [lo, hi).
double uniform(Rng& rng, double lo, double hi);
/// Uniform in (0, 1].
double unit_factor(Rng& rng);
std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi_inclusive);

/// Independent seed for the index-th trial of a run (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Mixed mode flips a fair coin between the point space and R^dim.
FeatureSpace random_space(Rng& rng, const NetworkSampler& sampler);
Feature random_feature(Rng& rng, const FeatureSpace& space);
FeaturedNetwork random_network(Rng& rng, std::size_t n, const FeatureSpace& space, const NetworkSampler& sampler);
FeaturedNetwork random_network(Rng& rng, const NetworkSampler& sampler);

}  // namespace embax
