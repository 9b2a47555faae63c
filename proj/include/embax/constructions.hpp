#pragma once

// Explicit instances behind each possibility and impossibility result:
// counterexamples to consistency, graph-awareness witnesses, and the replay
// of the impossibility argument on a concrete embedder.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "embax/embedders.hpp"
#include "embax/maps.hpp"
#include "embax/netcore.hpp"

namespace embax {

/// Comparison slack for real-valued embedders; combinatorial ones compare exactly.
inline constexpr double kRealTolerance = 1e-9;

/// a < b, allowing kRealTolerance slack when `real_valued`.
bool strictly_less(const ExtReal& a, const ExtReal& b, bool real_valued);
bool differs(const ExtReal& a, const ExtReal& b, bool real_valued);

// --- triangle-linkage -------------------------------------------------------

struct TriangleCounterexample {
  FeaturedNetwork source;  // equilateral, all sides delta
  FeaturedNetwork target;  // delta/2 between the first two nodes, 2*delta to the third
  NodeMap map;             // first -> first, second -> second, third -> second
  Embedding phi_source;
  Embedding phi_target;
  CodniResult codni;
  bool injective = false;
  bool violated = false;  // phi_source(0,1) < phi_target(map 0, map 1)
};

TriangleCounterexample triangle_consistency_counterexample(double delta);

struct TriangleAwarenessWitness {
  double delta = 0.0;                // triangle-linkage phi(i, j) on the input
  std::vector<std::size_t> raised;   // nodes k with d(i,k), d(j,k) <= delta
  FeaturedNetwork perturbed;         // d'(i,k) = d'(j,k) = 2*delta for raised k
  ExtReal phi_before;
  ExtReal phi_after;
};

/// Raises both sides of every triangle that realizes phi(i, j). Needs n >= 3
/// and i != j (BadIndices); DegenerateInput if phi(i, j) is +inf.
TriangleAwarenessWitness triangle_awareness_witness(const FeaturedNetwork& network, std::size_t i, std::size_t j);

// --- single-linkage ---------------------------------------------------------

struct ShortcutWitness {
  double alpha = 0.0;  // single-linkage phi(i, j)
  std::size_t via = 0; // smallest node outside {i, j}
  FeaturedNetwork perturbed;  // d'(i,via) = d'(j,via) = alpha / 2, d'(i,j) kept
};

/// A member of the arbitrary-perturbation family that pulls i and j together
/// through a third node. Needs n >= 3 and i != j.
ShortcutWitness shortcut_witness(const FeaturedNetwork& network, std::size_t i, std::size_t j);

// --- eigenvector centrality -------------------------------------------------

struct SpectralRealization {
  Matrix target;        // ideal adjacency
  FeaturedNetwork network;
  Matrix realized;      // adjacency of `network`
  double frobenius = 0.0;
  ExtReal phi;          // phi(i, j) of `network`
  EigenDiagnostics diagnostics;
};

struct SpectralAwarenessWitness {
  std::size_t i = 0, j = 0, third = 0;
  double alpha = 0.0;  // kappa on (i, j), untouched
  double beta = 0.0;   // smallest kappa over pairs touching a node outside {i, j}
  double filler = 0.0; // kappa value standing in for the zero entries
  ExtReal phi_base;
  SpectralRealization balanced;  // third node tied to i and j by beta
  SpectralRealization skewed;    // beta to i, beta/2 to j
};

/// Two perturbations of `network` that keep d(i, j) and only raise other
/// dissimilarities, realizing the balanced and skewed adjacency targets to
/// within `frobenius_tol`. Balanced gives phi(i, j) ~ 0, skewed gives a
/// clearly positive phi(i, j); one of them must move phi(i, j).
SpectralAwarenessWitness spectral_awareness_witness(const FeaturedNetwork& network, std::size_t i, std::size_t j,
                                                    const EigenvectorCentrality& config,
                                                    double frobenius_tol = 1e-6);

/// Base network on n nodes with the given features whose kernel values are
/// 0.5 between the first two nodes and 0.25 elsewhere, then the witness for
/// the first pair. KernelNotInvertibleAtValue if the features make those
/// kernel values unreachable.
SpectralAwarenessWitness spectral_awareness_witness(std::size_t n, const EigenvectorCentrality& config,
                                                    const FeatureSpace& space, const std::vector<Feature>& features,
                                                    double frobenius_tol = 1e-6);

struct SpectralCounterexample {
  FeaturedNetwork pair;    // kappa = 0.5
  FeaturedNetwork triple;  // kappa = 0.5, 0.25, 0.125
  NodeMap inclusion;
  CodniResult codni;
  ExtReal phi_pair;
  ExtReal phi_triple;
  EigenDiagnostics pair_diagnostics;
  EigenDiagnostics triple_diagnostics;
  bool violated = false;
};

/// Every node carries `feature` (the point by default).
SpectralCounterexample spectral_consistency_counterexample(const EigenvectorCentrality& config);
SpectralCounterexample spectral_consistency_counterexample(const EigenvectorCentrality& config,
                                                           const FeatureSpace& space, const Feature& feature);

// --- impossibility replay ---------------------------------------------------

struct TraceConfig {
  double delta = 1.0;
  std::size_t samples = 100;
  /// Perturbation factors are drawn from [1, 2] instead of [1, max_factor],
  /// which keeps every sampled d1 a metric.
  bool metric_only = false;
  double max_factor = 3.0;
};

struct TraceSample {
  Matrix d1;
  ExtReal phi_base;       // phi(i, j) on the all-delta network
  ExtReal phi_perturbed;  // phi1(i, j)
  ExtReal g_value;        // phi2 on the two-node restriction
  bool inclusion_bound_base = true;   // phi(i,j)  <= phi2
  bool collapse_bound_base = true;    // phi(i,j)  >= phi2
  bool inclusion_bound = true;        // phi1(i,j) <= phi2
  bool collapse_bound = true;         // phi1(i,j) >= phi2
  bool equality = true;               // phi(i,j) == phi1(i,j)
};

struct TraceReport {
  std::string embedder;
  std::size_t i = 0, j = 0;
  double delta = 0.0;
  bool metric_only = false;
  FeaturedNetwork base;
  FeaturedNetwork restricted;
  NodeMap inclusion;
  NodeMap collapse;
  std::vector<TraceSample> samples;
  bool equality_always = true;
  bool chain_always_holds = true;
  std::optional<std::size_t> first_broken_sample;
  std::optional<std::string> first_broken_inequality;
};

/// Replays the impossibility argument: picks the feature-closest pair (i, j),
/// builds the all-delta network, samples d1 raising everything except (i, j),
/// and checks both consistency bounds through the two-node restriction.
/// Throws CodniAssertionFailed if one of the four maps is not CoDNI.
TraceReport theorem1_trace(const Embedder& e, const FeatureSpace& space, const std::vector<Feature>& features,
                           const TraceConfig& config, std::uint64_t seed);

/// The feature-closest pair: argmin of rho over distinct nodes, smallest indices on ties.
std::pair<std::size_t, std::size_t> feature_closest_pair(const FeatureSpace& space,
                                                         const std::vector<Feature>& features);

}  // namespace embax
