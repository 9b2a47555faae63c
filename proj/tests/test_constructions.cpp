#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "embax/constructions.hpp"
#include "embax/error.hpp"
#include "embax/generators.hpp"
#include "embax/perturbation.hpp"

using namespace embax;

TEST_CASE("tolerant comparisons") {
  CHECK(strictly_less(ExtReal(1.0), ExtReal(2.0), false));
  CHECK_FALSE(strictly_less(ExtReal(1.0), ExtReal(1.0 + 1e-12), true));
  CHECK(strictly_less(ExtReal(1.0), ExtReal(1.0 + 1e-12), false));
  CHECK(strictly_less(ExtReal(1.0), ExtReal::infinity(), true));
  CHECK_FALSE(differs(ExtReal::infinity(), ExtReal::infinity(), true));
  CHECK(differs(ExtReal(1.0), ExtReal::infinity(), true));
}

TEST_CASE("perturbation families") {
  const auto net = point_network(Matrix{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
  const PerturbationFamily dij{PerturbationFamily::Kind::Dij, 0, 1};
  const PerturbationFamily cij{PerturbationFamily::Kind::Cij, 0, 1};
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    CHECK(dij.contains(net, dij.sample(net, rng)));
    CHECK(cij.contains(net, cij.sample(net, rng)));
  }
  const Matrix lowered{{0, 1, 1}, {1, 0, 3}, {1, 3, 0}};
  CHECK_FALSE(dij.contains(net, lowered));
  CHECK(cij.contains(net, lowered));
  const Matrix moved{{0, 2, 2}, {2, 0, 3}, {2, 3, 0}};
  CHECK_FALSE(cij.contains(net, moved));
  CHECK_THROWS_AS(dij.require_member(net, lowered), Error);
}

TEST_CASE("triangle-linkage consistency counterexample") {
  for (double delta : {1.0, 0.3, 7.0}) {
    const auto c = triangle_consistency_counterexample(delta);
    CHECK(c.codni.holds);
    CHECK_FALSE(c.injective);
    CHECK(c.phi_source(0, 1) == ExtReal(delta));
    CHECK(c.phi_target(0, 1) == ExtReal(2 * delta));
    CHECK(c.violated);
  }
}

TEST_CASE("triangle awareness witness raises phi above delta") {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto net = random_network(rng, NetworkSampler{3, 7});
    for (std::size_t i = 0; i < net.size(); ++i) {
      for (std::size_t j = i + 1; j < net.size(); ++j) {
        const auto w = triangle_awareness_witness(net, i, j);
        CHECK(w.phi_before == ExtReal(w.delta));
        CHECK(w.phi_after > ExtReal(w.delta));
        CHECK(PerturbationFamily{PerturbationFamily::Kind::Dij, i, j}.contains(net, w.perturbed.d()));
      }
    }
  }
  CHECK_THROWS_AS(triangle_awareness_witness(point_network(Matrix{{0, 1}, {1, 0}}), 0, 1), Error);
}

TEST_CASE("shortcut witness halves single-linkage") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto net = random_network(rng, NetworkSampler{3, 7});
    const auto w = shortcut_witness(net, 0, net.size() - 1);
    CHECK(single_linkage(w.perturbed)(0, net.size() - 1) <= ExtReal(w.alpha / 2));
    CHECK(PerturbationFamily{PerturbationFamily::Kind::Cij, 0, net.size() - 1}.contains(net, w.perturbed.d()));
  }
}

TEST_CASE("spectral constructions") {
  const auto c = spectral_consistency_counterexample(EigenvectorCentrality{});
  CHECK(c.codni.holds);
  CHECK(c.phi_pair.value() <= 1e-8);
  CHECK(c.phi_triple.value() >= 1e-3);
  CHECK(c.violated);

  const std::vector<Feature> points(3, Feature{});
  const auto w = spectral_awareness_witness(3, EigenvectorCentrality{}, FeatureSpace::point(), points);
  CHECK(w.balanced.frobenius <= 1e-6);
  CHECK(w.skewed.frobenius <= 1e-6);
  CHECK(w.alpha == doctest::Approx(0.5));
  CHECK(w.beta == doctest::Approx(0.25));
  CHECK(w.skewed.phi.value() - w.balanced.phi.value() >= 1e-3);

  SUBCASE("larger networks and vector features") {
    const auto space = FeatureSpace::vector(1);
    const std::vector<Feature> close{{0.0}, {0.01}, {0.02}, {0.03}, {0.04}};
    const auto big = spectral_awareness_witness(5, EigenvectorCentrality{}, space, close);
    CHECK(big.balanced.frobenius <= 1e-6);
    CHECK(big.skewed.frobenius <= 1e-6);
    CHECK(differs(big.balanced.phi, big.skewed.phi, true));
  }
}

TEST_CASE("impossibility trace") {
  const std::vector<Feature> points(3, Feature{});
  const auto sl = theorem1_trace(SingleLinkage{}, FeatureSpace::point(), points, {}, 0);
  CHECK(sl.samples.size() == 100);
  CHECK(sl.equality_always);
  CHECK(sl.chain_always_holds);

  const auto tl = theorem1_trace(TriangleLinkage{}, FeatureSpace::point(), points, {}, 0);
  CHECK_FALSE(tl.chain_always_holds);
  CHECK(tl.first_broken_inequality.has_value());

  const auto space = FeatureSpace::vector(1);
  CHECK(feature_closest_pair(space, {{0.0}, {5.0}, {5.5}}) == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(feature_closest_pair(space, {{0.0}, {1.0}, {2.0}}) == std::pair<std::size_t, std::size_t>{0, 1});
}
