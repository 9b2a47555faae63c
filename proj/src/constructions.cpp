#include "embax/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "embax/error.hpp"
#include "embax/perturbation.hpp"

namespace embax {

bool strictly_less(const ExtReal& a, const ExtReal& b, bool real_valued) {
  if (!real_valued || a.is_infinite() || b.is_infinite()) return a < b;
  return a.value() < b.value() - kRealTolerance;
}

bool differs(const ExtReal& a, const ExtReal& b, bool real_valued) {
  return strictly_less(a, b, real_valued) || strictly_less(b, a, real_valued);
}

namespace {

void require_pair(const FeaturedNetwork& network, std::size_t i, std::size_t j) {
  if (network.size() < 3) throw Error(ErrorCode::BadIndices, "construction needs at least three nodes");
  if (i >= network.size() || j >= network.size() || i == j) {
    throw Error(ErrorCode::BadIndices, "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }
}

std::size_t smallest_other(std::size_t n, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < n; ++k) {
    if (k != i && k != j) return k;
  }
  throw Error(ErrorCode::BadIndices, "no third node");
}

}  // namespace

TriangleCounterexample triangle_consistency_counterexample(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  FeaturedNetwork source = point_network(Matrix{{0, delta, delta}, {delta, 0, delta}, {delta, delta, 0}});
  FeaturedNetwork target =
      point_network(Matrix{{0, delta / 2, 2 * delta}, {delta / 2, 0, 2 * delta}, {2 * delta, 2 * delta, 0}});
  NodeMap map(3, {0, 1, 1});
  Embedding phi_source = triangle_linkage(source);
  Embedding phi_target = triangle_linkage(target);
  CodniResult codni = is_codni(map, source, target);
  const bool violated = phi_source(0, 1) < phi_target(map(0), map(1));
  const bool injective = is_injective(map);
  return {std::move(source), std::move(target), std::move(map), std::move(phi_source), std::move(phi_target),
          codni, injective, violated};
}

TriangleAwarenessWitness triangle_awareness_witness(const FeaturedNetwork& network, std::size_t i, std::size_t j) {
  require_pair(network, i, j);
  const Embedding phi = triangle_linkage(network);
  if (phi(i, j).is_infinite()) throw Error(ErrorCode::DegenerateInput, "triangle-linkage distance is +inf");
  const double delta = phi(i, j).value();

  Matrix d = network.d();
  std::vector<std::size_t> raised;
  for (std::size_t k = 0; k < network.size(); ++k) {
    if (k == i || k == j) continue;
    if (network.d(i, k) <= delta && network.d(j, k) <= delta) {
      raised.push_back(k);
      for (std::size_t end : {i, j}) {
        if (d(end, k) < 2 * delta) d(end, k) = d(k, end) = 2 * delta;
      }
    }
  }
  FeaturedNetwork perturbed = network.with_dissimilarities(d);
  PerturbationFamily{PerturbationFamily::Kind::Dij, i, j}.require_member(network, d);
  ExtReal after = triangle_linkage(perturbed)(i, j);
  return {delta, std::move(raised), std::move(perturbed), phi(i, j), after};
}

ShortcutWitness shortcut_witness(const FeaturedNetwork& network, std::size_t i, std::size_t j) {
  require_pair(network, i, j);
  const double alpha = single_linkage(network)(i, j).value();
  const std::size_t via = smallest_other(network.size(), i, j);
  Matrix d = network.d();
  d(i, via) = d(via, i) = alpha / 2;
  d(j, via) = d(via, j) = alpha / 2;
  FeaturedNetwork perturbed = network.with_dissimilarities(d);
  PerturbationFamily{PerturbationFamily::Kind::Cij, i, j}.require_member(network, d);
  return {alpha, via, std::move(perturbed)};
}

namespace {

double kappa_at(const EigenvectorCentrality& config, const FeaturedNetwork& network, std::size_t a, std::size_t b) {
  return kappa(config.kernel, network.d(a, b), network.space(), network.feature(a), network.feature(b));
}

// Smallest dissimilarity >= the current one whose kernel value is `value`.
double raise_to_kernel_value(const EigenvectorCentrality& config, const FeaturedNetwork& network, std::size_t a,
                             std::size_t b, double value) {
  const double x =
      kappa_inverse(config.kernel, value, network.space(), network.feature(a), network.feature(b));
  // Rounding in the inverse may land an ulp below d when value == kappa(d).
  return std::max(x, network.d(a, b));
}

SpectralRealization realize(const FeaturedNetwork& network, const EigenvectorCentrality& config, std::size_t i,
                            std::size_t j, std::size_t third, double beta_to_i, double beta_to_j, double filler) {
  const std::size_t n = network.size();
  Matrix target(n);
  Matrix d = network.d();
  for (std::size_t a = 0; a < n; ++a) {
    if (config.diagonal == AdjacencyDiagonal::Kappa) {
      target(a, a) = kappa(config.kernel, 0.0, network.space(), network.feature(a), network.feature(a));
    }
    for (std::size_t b = a + 1; b < n; ++b) {
      double want = 0.0;
      double realize_as = filler;
      if ((a == i && b == j) || (a == j && b == i)) {
        want = realize_as = kappa_at(config, network, a, b);
      } else if ((a == i && b == third) || (a == third && b == i)) {
        want = realize_as = beta_to_i;
      } else if ((a == j && b == third) || (a == third && b == j)) {
        want = realize_as = beta_to_j;
      }
      target(a, b) = target(b, a) = want;
      if (!((a == i && b == j) || (a == j && b == i))) {
        d(a, b) = d(b, a) = raise_to_kernel_value(config, network, a, b, realize_as);
      }
    }
  }
  PerturbationFamily{PerturbationFamily::Kind::Dij, i, j}.require_member(network, d);

  SpectralRealization out{std::move(target), network.with_dissimilarities(d), Matrix{}, 0.0, ExtReal(0.0), {}};
  EigenvectorEmbedding emb = eigenvector_embedding(out.network, config);
  out.realized = std::move(emb.adjacency);
  out.frobenius = frobenius_distance(out.realized, out.target);
  out.phi = emb.embedding(i, j);
  out.diagnostics = std::move(emb.diagnostics);
  return out;
}

}  // namespace

SpectralAwarenessWitness spectral_awareness_witness(const FeaturedNetwork& network, std::size_t i, std::size_t j,
                                                    const EigenvectorCentrality& config, double frobenius_tol) {
  require_pair(network, i, j);
  if (!(frobenius_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "frobenius tolerance must be positive");
  const std::size_t n = network.size();

  const std::size_t third = smallest_other(n, i, j);

  // beta: smallest kernel value on a pair with an endpoint outside {i, j}.
  // filler: one common value for every entry the targets want to be zero,
  // small enough for the Frobenius budget and never above the current kernel.
  double beta = std::numeric_limits<double>::infinity();
  double smallest_other_pair = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool outside = (a != i && a != j) || (b != i && b != j);
      if (!outside) continue;
      const double k = kappa_at(config, network, a, b);
      beta = std::min(beta, k);
      const bool in_triangle = (a == third || b == third) && (a == i || a == j || b == i || b == j);
      if (!in_triangle) smallest_other_pair = std::min(smallest_other_pair, k);
    }
  }
  const double filler = std::min(smallest_other_pair, frobenius_tol / (4.0 * static_cast<double>(n)));

  return {i,
          j,
          third,
          kappa_at(config, network, i, j),
          beta,
          filler,
          eigenvector_embedding(network, config).embedding(i, j),
          realize(network, config, i, j, third, beta, beta, filler),
          realize(network, config, i, j, third, beta, beta / 2, filler)};
}

SpectralAwarenessWitness spectral_awareness_witness(std::size_t n, const EigenvectorCentrality& config,
                                                    const FeatureSpace& space, const std::vector<Feature>& features,
                                                    double frobenius_tol) {
  if (n < 3) throw Error(ErrorCode::BadIndices, "construction needs at least three nodes");
  if (features.size() != n) throw Error(ErrorCode::FeatureLengthMismatch, "features for the base network");
  Matrix d(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double value = (a == 0 && b == 1) ? 0.5 : 0.25;
      d(a, b) = d(b, a) = kappa_inverse(config.kernel, value, space, features[a], features[b]);
    }
  }
  // kappa_inverse clamps at 0, which validate_network rejects as a zero
  // dissimilarity only when kappa(0) == value exactly.
  FeaturedNetwork base = validate_network(d, space, features);
  return spectral_awareness_witness(base, 0, 1, config, frobenius_tol);
}

SpectralCounterexample spectral_consistency_counterexample(const EigenvectorCentrality& config) {
  return spectral_consistency_counterexample(config, FeatureSpace::point(), Feature{});
}

SpectralCounterexample spectral_consistency_counterexample(const EigenvectorCentrality& config,
                                                           const FeatureSpace& space, const Feature& feature) {
  auto inverse = [&](double value) { return kappa_inverse(config.kernel, value, space, feature, feature); };
  const double d12 = inverse(0.5);
  const double d13 = inverse(0.25);
  const double d23 = inverse(0.125);

  FeaturedNetwork pair = validate_network(Matrix{{0, d12}, {d12, 0}}, space, {feature, feature});
  FeaturedNetwork triple = validate_network(Matrix{{0, d12, d13}, {d12, 0, d23}, {d13, d23, 0}}, space,
                                            {feature, feature, feature});
  NodeMap inclusion(3, {0, 1});
  CodniResult codni = is_codni(inclusion, pair, triple);

  EigenvectorEmbedding small = eigenvector_embedding(pair, config);
  EigenvectorEmbedding large = eigenvector_embedding(triple, config);
  const ExtReal phi_pair = small.embedding(0, 1);
  const ExtReal phi_triple = large.embedding(inclusion(0), inclusion(1));
  const bool violated = codni.holds && strictly_less(phi_pair, phi_triple, true);
  return {std::move(pair),
          std::move(triple),
          std::move(inclusion),
          codni,
          phi_pair,
          phi_triple,
          std::move(small.diagnostics),
          std::move(large.diagnostics),
          violated};
}

std::pair<std::size_t, std::size_t> feature_closest_pair(const FeatureSpace& space,
                                                         const std::vector<Feature>& features) {
  if (features.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two features");
  std::pair<std::size_t, std::size_t> best{0, 1};
  double best_rho = rho(space, features[0], features[1]);
  for (std::size_t a = 0; a < features.size(); ++a) {
    for (std::size_t b = a + 1; b < features.size(); ++b) {
      const double r = rho(space, features[a], features[b]);
      if (r < best_rho) {
        best_rho = r;
        best = {a, b};
      }
    }
  }
  return best;
}

namespace {

void assert_codni(const NodeMap& m, const FeaturedNetwork& source, const FeaturedNetwork& target,
                  const std::string& which) {
  const CodniResult r = is_codni(m, source, target);
  if (r.holds) return;
  const auto& v = *r.first_violation;
  throw Error(ErrorCode::CodniAssertionFailed,
              which + " fails at (" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + ")" +
                  (v.feature_expanded ? " [feature]" : "") + (v.dissimilarity_increased ? " [dissimilarity]" : ""));
}

}  // namespace

TraceReport theorem1_trace(const Embedder& e, const FeatureSpace& space, const std::vector<Feature>& features,
                           const TraceConfig& config, std::uint64_t seed) {
  const std::size_t n = features.size();
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "the replay needs at least three nodes");
  if (!(config.delta > 0.0) || !std::isfinite(config.delta)) {
    throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  }
  const auto [i, j] = feature_closest_pair(space, features);

  Matrix all_delta(n, config.delta);
  for (std::size_t k = 0; k < n; ++k) all_delta(k, k) = 0.0;
  FeaturedNetwork base = validate_network(all_delta, space, features);
  const std::vector<std::size_t> subset{i, j};
  FeaturedNetwork restricted = restrict(base, subset);
  NodeMap inclusion = inclusion_map(n, subset);
  NodeMap collapse = collapse_map(n, i, j);

  assert_codni(inclusion, restricted, base, "inclusion N2 -> N");
  assert_codni(collapse, base, restricted, "collapse N -> N2");

  const bool real = is_real_valued(e);
  const ExtReal phi_base = embed(e, base)(i, j);
  const ExtReal g_value = embed(e, restricted)(0, 1);

  PerturbationFamily family{PerturbationFamily::Kind::Dij, i, j};
  family.max_factor = config.metric_only ? 2.0 : config.max_factor;

  TraceReport report{embedder_name(e), i, j, config.delta, config.metric_only, base, restricted, inclusion, collapse,
                     {}, true, true, std::nullopt, std::nullopt};
  Rng rng(seed);
  for (std::size_t s = 0; s < config.samples; ++s) {
    Matrix d1 = family.sample(base, rng);
    family.require_member(base, d1);
    FeaturedNetwork perturbed = base.with_dissimilarities(d1);
    assert_codni(inclusion, restricted, perturbed, "inclusion N2 -> N1");
    assert_codni(collapse, perturbed, restricted, "collapse N1 -> N2");

    TraceSample t;
    t.d1 = std::move(d1);
    t.phi_base = phi_base;
    t.phi_perturbed = embed(e, perturbed)(i, j);
    t.g_value = g_value;
    t.inclusion_bound_base = !strictly_less(g_value, phi_base, real);
    t.collapse_bound_base = !strictly_less(phi_base, g_value, real);
    t.inclusion_bound = !strictly_less(g_value, t.phi_perturbed, real);
    t.collapse_bound = !strictly_less(t.phi_perturbed, g_value, real);
    t.equality = !differs(phi_base, t.phi_perturbed, real);

    report.equality_always = report.equality_always && t.equality;
    const bool chain = t.inclusion_bound_base && t.collapse_bound_base && t.inclusion_bound && t.collapse_bound;
    if (!chain && report.chain_always_holds) {
      report.chain_always_holds = false;
      report.first_broken_sample = s;
      if (!t.inclusion_bound_base) {
        report.first_broken_inequality = "phi(i,j) <= phi2(i,j) via inclusion N2 -> N";
      } else if (!t.collapse_bound_base) {
        report.first_broken_inequality = "phi(i,j) >= phi2(i,j) via collapse N -> N2";
      } else if (!t.inclusion_bound) {
        report.first_broken_inequality = "phi1(i,j) <= phi2(i,j) via inclusion N2 -> N1";
      } else {
        report.first_broken_inequality = "phi1(i,j) >= phi2(i,j) via collapse N1 -> N2";
      }
    }
    report.samples.push_back(std::move(t));
  }
  return report;
}

}  // namespace embax
