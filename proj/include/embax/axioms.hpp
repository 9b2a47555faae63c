#pragma once

// The audit engine: sampled and constructive checks of each embedder against
// self-containedness, consistency (plain and injective) and graph-awareness
// (plain and weak).
//
// Verdicts never overclaim. HoldsOnSamples means no counterexample turned up
// among the samples drawn; ViolatedWithWitness and WitnessFound carry an
// instance that settles the question; SearchExhausted means some sampled
// (network, pair) admitted no witness among the candidates tried.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "embax/embedders.hpp"
#include "embax/generators.hpp"
#include "embax/json_io.hpp"
#include "embax/perturbation.hpp"

namespace embax {

enum class PropertyId { SelfContained, Consistent, GraphAware, WeaklyGraphAware, InjectivelyConsistent };

std::string_view to_string(PropertyId p) noexcept;
/// Accepts the to_string spellings; throws InvalidArgument otherwise.
PropertyId parse_property(std::string_view name);

/// Every property implied by p, including p itself.
std::vector<PropertyId> implied_properties(PropertyId p);

enum class VerdictKind { HoldsOnSamples, ViolatedWithWitness, WitnessFound, SearchExhausted };

std::string_view to_string(VerdictKind v) noexcept;

struct AuditVerdict {
  std::string embedder;
  PropertyId property = PropertyId::SelfContained;
  VerdictKind verdict = VerdictKind::HoldsOnSamples;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  Json witness;   // null unless the verdict names an instance
  Json evidence;  // sample statistics; never a substitute for a witness

  bool conclusive() const noexcept {
    return verdict == VerdictKind::ViolatedWithWitness || verdict == VerdictKind::WitnessFound;
  }
};

/// {"embedder", "property", "verdict", "witness", "trials", "seed", "evidence"}
Json to_json(const AuditVerdict& v);

/// Two-node networks that agree on (features, alpha) up to relabeling must
/// embed to the same phi. Half the trials draw from a small pool so repeats
/// occur; evidence.g_matches counts trials with phi == alpha, +inf and 0.
AuditVerdict check_self_contained(const Embedder& e, std::size_t trials, std::uint64_t seed);

struct ConsistencyOptions {
  bool injective_only = false;
  /// Evaluate the known counterexample instances before the random ones.
  bool include_fixtures = true;
  CodniBounds bounds{2, 6, false, 100};
};

/// phi1(i, j) >= phi2(m i, m j) over random CoDNI instances. Property is
/// InjectivelyConsistent when injective_only is set.
AuditVerdict check_consistency(const Embedder& e, std::size_t trials, std::uint64_t seed,
                               const ConsistencyOptions& options = {});

enum class PairSelection {
  AllPairs,
  ArgminDissimilarity,  // only the pair with the smallest d, smallest indices on ties
};

struct AwarenessSearch {
  PerturbationFamily::Kind family = PerturbationFamily::Kind::Dij;
  PairSelection pairs = PairSelection::AllPairs;
  std::size_t base_networks = 50;
  std::size_t samples_per_pair = 50;
  NetworkSampler sampler{};  // min_n must be >= 3
  /// Try the explicit constructions (triangle raise, spectral targets and,
  /// for Cij, the shortcut) before random members of the family.
  bool use_constructions = true;
  double min_factor = 1.0;
  double max_factor = 3.0;
  double fresh_scale = 2.0;
};

/// Property is GraphAware for Dij, WeaklyGraphAware for Cij.
AuditVerdict check_graph_awareness(const Embedder& e, const AwarenessSearch& search, std::uint64_t seed);

struct AuditOptions {
  std::size_t trials = 200;
  AwarenessSearch awareness{};
};

/// Runs the requested checks; trial seeds are derived from `seed` per property.
std::vector<AuditVerdict> audit(const Embedder& e, std::span<const PropertyId> properties,
                                const AuditOptions& options, std::uint64_t seed);

/// False iff some embedder's verdicts contain the impossible combination:
/// self-containedness and consistency both holding on samples together with
/// a conclusive graph-awareness witness.
bool impossibility_shadow_holds(std::span<const AuditVerdict> verdicts);

}  // namespace embax
