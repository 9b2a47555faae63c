#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "embax/constructions.hpp"
#include "embax/embedders.hpp"
#include "embax/error.hpp"
#include "embax/generators.hpp"
#include "oracles.hpp"

using namespace embax;

namespace {

double as_double(const ExtReal& x) { return x.is_infinite() ? oracle::kInf : x.value(); }

std::vector<std::size_t> shuffled(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("single-linkage on the 3-1-1 triangle") {
  const auto net = point_network(Matrix{{0, 3, 1}, {3, 0, 1}, {1, 1, 0}});
  const auto phi = single_linkage(net);
  CHECK(phi(0, 1) == ExtReal(1.0));
  CHECK(phi(0, 2) == ExtReal(1.0));
  CHECK(phi(1, 1) == ExtReal(0.0));
  CHECK(single_linkage(point_network(Matrix{{0, 2.5}, {2.5, 0}}))(0, 1) == ExtReal(2.5));
}

TEST_CASE("single-linkage matches the path oracle and is an ultrametric") {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto net = random_network(rng, NetworkSampler{2, 6});
    const auto phi = single_linkage(net);
    const std::size_t n = net.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(as_double(phi(i, j)) == oracle::path_minmax(net.d(), i, j));
        for (std::size_t k = 0; k < n; ++k) CHECK(phi(i, j) <= std::max(phi(i, k), phi(k, j)));
      }
    }
  }
}

TEST_CASE("triangle-linkage") {
  CHECK(triangle_linkage(point_network(Matrix{{0, 1}, {1, 0}}))(0, 1).is_infinite());
  CHECK(triangle_linkage(point_network(Matrix{{0, 1}, {1, 0}}))(0, 0) == ExtReal(0.0));

  const auto net = point_network(Matrix{{0, 1, 5, 2}, {1, 0, 3, 4}, {5, 3, 0, 1}, {2, 4, 1, 0}});
  const auto r = triangle_linkage_detailed(net);
  // (1,2): third 3 gives max(1,5,3)=5, third 4 gives max(1,2,4)=4
  CHECK(r.embedding(0, 1) == ExtReal(4.0));
  CHECK(r.witness[0 * 4 + 1] == std::optional<std::size_t>(3));

  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_network(rng, NetworkSampler{2, 6});
    const auto phi = triangle_linkage(g);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) CHECK(as_double(phi(i, j)) == oracle::triangle(g.d(), i, j));
  }
}

TEST_CASE("eigenvector embedding reference values") {
  const auto log = [](double v) { return -std::log(v); };
  const auto net = point_network(
      Matrix{{0, log(.5), log(.25)}, {log(.5), 0, log(.125)}, {log(.25), log(.125), 0}});
  const auto r = eigenvector_embedding(net, {});
  CHECK(r.embedding(0, 1).value() == doctest::Approx(0.035100492371116065).epsilon(1e-9));
  CHECK(r.embedding(0, 2).value() == doctest::Approx(0.21263302330549322).epsilon(1e-9));
  CHECK(r.embedding(1, 2).value() == doctest::Approx(0.17753253093437715).epsilon(1e-9));

  EigenvectorCentrality ones;
  ones.diagonal = AdjacencyDiagonal::Kappa;
  const auto d = eigenvector_embedding(net, ones);
  CHECK(d.diagnostics.lambda == doctest::Approx(1.615542999002531).epsilon(1e-12));
  CHECK(d.embedding(0, 1).value() == doctest::Approx(0.05686476795666764).epsilon(1e-9));
  CHECK(d.adjacency(1, 1) == 1.0);
}

TEST_CASE("eigenvector embedding is zero on two nodes with equal features") {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const double x = uniform(rng, 0.1, 10.0);
    const auto net = validate_network(Matrix{{0, x}, {x, 0}}, FeatureSpace::vector(2), {{0.3, 0.1}, {0.3, 0.1}});
    CHECK(embed(EigenvectorCentrality{}, net)(0, 1).value() <= 1e-10);
    EigenvectorCentrality ones;
    ones.diagonal = AdjacencyDiagonal::Kappa;
    CHECK(embed(ones, net)(0, 1).value() <= 1e-10);
  }
}

TEST_CASE("all embedders are permutation equivariant") {
  Rng rng(21);
  const std::vector<Embedder> embedders{SingleLinkage{}, TriangleLinkage{}, EigenvectorCentrality{}};
  for (int t = 0; t < 100; ++t) {
    const auto net = random_network(rng, NetworkSampler{2, 7});
    const auto perm = shuffled(net.size(), rng);
    for (const auto& e : embedders) {
      const auto direct = permute(embed(e, net), perm);
      const auto relabeled = embed(e, permute(net, perm));
      for (std::size_t i = 0; i < net.size(); ++i)
        for (std::size_t j = 0; j < net.size(); ++j)
          CHECK_FALSE(differs(direct(i, j), relabeled(i, j), is_real_valued(e)));
    }
  }
}

TEST_CASE("partition encoder") {
  const Partition p{{2, 0}, {1}, {3}};
  const auto phi = encode_partition(p, 4, 0.5);
  CHECK(phi(0, 2) == ExtReal(0.0));
  CHECK(phi(0, 1) == ExtReal(0.5));
  const auto back = decode_partition(phi);
  CHECK(back.partition == canonical_partition(p));
  CHECK(back.epsilon == 0.5);
  CHECK(decode_partition(encode_partition({{0, 1, 2}}, 3, 2.0)).epsilon == std::nullopt);
  CHECK(embed(PartitionEncoder{{{0}, {1}}, 1.0}, point_network(Matrix{{0, 9}, {9, 0}}))(0, 1) == ExtReal(1.0));

  CHECK_THROWS_AS(encode_partition({{0}, {1}}, 2, 0.0), Error);
  CHECK_THROWS_AS(encode_partition({{0}, {0, 1}}, 2, 1.0), Error);
  CHECK_THROWS_AS(encode_partition({{0}}, 2, 1.0), Error);
  CHECK_THROWS_AS(encode_partition({{0}, {}, {1}}, 2, 1.0), Error);
  CHECK_THROWS_AS(encode_partition({{0, 2}}, 2, 1.0), Error);

  // zero relation not transitive: 0~1, 1~2, 0 !~ 2
  const auto bad = Embedding::from_matrix(Matrix{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}});
  CHECK_THROWS_AS(decode_partition(bad), Error);
  CHECK_THROWS_AS(decode_partition(Embedding::from_matrix(Matrix{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}})), Error);
  const auto inf = ExtReal::infinity();
  CHECK_THROWS_AS(decode_partition(Embedding(2, {ExtReal(0.0), inf, inf, ExtReal(0.0)})), Error);
}

TEST_CASE("embedder names") {
  CHECK(embedder_name(SingleLinkage{}) == "single-linkage");
  CHECK(embedder_name(TriangleLinkage{}) == "triangle-linkage");
  CHECK(embedder_name(EigenvectorCentrality{}) == "eigenvector");
  CHECK(is_real_valued(EigenvectorCentrality{}));
  CHECK_FALSE(is_real_valued(TriangleLinkage{}));
}
