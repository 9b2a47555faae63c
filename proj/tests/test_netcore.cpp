#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <string>

#include "embax/error.hpp"
#include "embax/generators.hpp"
#include "embax/netcore.hpp"

using namespace embax;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an embax::Error");
  return ErrorCode::InvalidArgument;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("ExtReal orders finite values below infinity") {
  const ExtReal one(1.0), two(2.0), inf = ExtReal::infinity();
  CHECK(one < two);
  CHECK(two < inf);
  CHECK(inf == ExtReal::infinity());
  CHECK_FALSE(inf < inf);
  CHECK(inf.is_infinite());
  CHECK(one.value() == 1.0);
  CHECK(code_of([&] { (void)inf.value(); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { ExtReal(std::numeric_limits<double>::infinity()); }) == ErrorCode::NonFiniteEntry);
  CHECK(code_of([] { ExtReal(std::nan("")); }) == ErrorCode::NonFiniteEntry);
}

TEST_CASE("feature spaces") {
  const auto point = FeatureSpace::point();
  const auto plane = FeatureSpace::vector(2);
  CHECK(point.contains({}));
  CHECK_FALSE(point.contains({1.0}));
  CHECK(plane.contains({1.0, 2.0}));
  CHECK(rho(plane, {0.0, 0.0}, {3.0, 4.0}) == doctest::Approx(5.0));
  CHECK(rho(point, {}, {}) == 0.0);
  CHECK(code_of([&] { (void)rho(plane, {1.0}, {1.0, 2.0}); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { (void)FeatureSpace::vector(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("validation reports the first violation, 1-based") {
  CHECK(message_of([] { point_network(Matrix{{0, 1}, {2, 0}}); }) == "AsymmetricMatrix at (1,2)");
  CHECK(code_of([] { point_network(Matrix{{1, 1}, {1, 0}}); }) == ErrorCode::NonzeroDiagonal);
  CHECK(code_of([] { point_network(Matrix{{0, 0}, {0, 0}}); }) == ErrorCode::NonpositiveOffDiagonal);
  CHECK(code_of([] { point_network(Matrix{{0, -1}, {-1, 0}}); }) == ErrorCode::NonpositiveOffDiagonal);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(code_of([&] { point_network(Matrix{{0, inf}, {inf, 0}}); }) == ErrorCode::NonFiniteEntry);
  CHECK(code_of([] { point_network(Matrix{}); }) == ErrorCode::MalformedMatrix);
  CHECK(code_of([] { validate_network(Matrix{{0, 1}, {1, 0}}, FeatureSpace::point(), {{}}); }) ==
        ErrorCode::FeatureLengthMismatch);
  CHECK(code_of([] { validate_network(Matrix{{0, 1}, {1, 0}}, FeatureSpace::vector(2), {{1, 2}, {1}}); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(code_of([] { Matrix::from_rows({{0, 1}, {1}}); }) == ErrorCode::MalformedMatrix);
  // row-major scan: (1,2) asymmetric is found before the bad diagonal at (3,3)
  CHECK(code_of([] { point_network(Matrix{{0, 1, 1}, {2, 0, 1}, {1, 1, 5}}); }) == ErrorCode::AsymmetricMatrix);
}

TEST_CASE("a network without a triangle inequality is still valid") {
  const auto net = point_network(Matrix{{0, 10, 1}, {10, 0, 1}, {1, 1, 0}});
  CHECK(net.size() == 3);
  CHECK(net.d(0, 1) == 10);
}

TEST_CASE("restriction") {
  const auto net = validate_network(Matrix{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}}, FeatureSpace::vector(1),
                                    {{0.0}, {1.0}, {2.0}});
  const std::vector<std::size_t> subset{2, 0};
  const auto sub = restrict(net, subset);
  CHECK(sub.size() == 2);
  CHECK(sub.d(0, 1) == 2);
  CHECK(sub.feature(0) == Feature{2.0});
  CHECK(sub.origin() == std::vector<std::size_t>{2, 0});

  const std::vector<std::size_t> empty, dup{1, 1}, out{3};
  CHECK(code_of([&] { restrict(net, empty); }) == ErrorCode::EmptySubset);
  CHECK(code_of([&] { restrict(net, dup); }) == ErrorCode::DuplicateNode);
  CHECK(code_of([&] { restrict(net, out); }) == ErrorCode::OutOfRange);

  SUBCASE("restriction composes") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
      const auto big = random_network(rng, NetworkSampler{4, 7});
      const std::vector<std::size_t> outer{3, 1, 0, 2};
      const std::vector<std::size_t> inner{2, 0};
      const std::vector<std::size_t> direct{outer[2], outer[0]};
      CHECK(restrict(restrict(big, outer), inner) == restrict(big, direct));
    }
  }
}

TEST_CASE("embedding invariants") {
  const auto inf = ExtReal::infinity();
  CHECK_NOTHROW(Embedding(2, {ExtReal(0.0), inf, inf, ExtReal(0.0)}));
  CHECK_NOTHROW(Embedding(2, {ExtReal(0.0), ExtReal(0.0), ExtReal(0.0), ExtReal(0.0)}));
  CHECK(code_of([&] { Embedding(2, {ExtReal(0.0), ExtReal(1.0), ExtReal(2.0), ExtReal(0.0)}); }) ==
        ErrorCode::InvalidEmbedding);
  CHECK(code_of([&] { Embedding(2, {ExtReal(1.0), ExtReal(1.0), ExtReal(1.0), ExtReal(0.0)}); }) ==
        ErrorCode::InvalidEmbedding);
  CHECK(code_of([&] { Embedding(2, {ExtReal(0.0)}); }) == ErrorCode::InvalidEmbedding);
  const auto e = Embedding::from_matrix(Matrix{{0, 1}, {1, 0}});
  CHECK(code_of([&] { check_embedding(e, 3); }) == ErrorCode::InvalidEmbedding);
}

TEST_CASE("permutation relabels nodes") {
  const auto net = point_network(Matrix{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
  const std::vector<std::size_t> perm{2, 0, 1};
  const auto p = permute(net, perm);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(p.d(perm[i], perm[j]) == net.d(i, j));
}

TEST_CASE("generators are seeded") {
  Rng a(42), b(42);
  CHECK(random_network(a, NetworkSampler{}) == random_network(b, NetworkSampler{}));
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
  Rng rng(3);
  for (int t = 0; t < 1000; ++t) {
    const double f = unit_factor(rng);
    CHECK(f > 0.0);
    CHECK(f <= 1.0);
  }
}
