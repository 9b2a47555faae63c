#include "embax/axioms.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <utility>

#include "embax/constructions.hpp"
#include "embax/error.hpp"
#include "embax/maps.hpp"

namespace embax {

namespace {

// Independent RNG streams per check, so each check reproduces on its own.
constexpr std::uint64_t kSelfContainedStream = 1;
constexpr std::uint64_t kSelfContainedPoolStream = 2;
constexpr std::uint64_t kConsistencyStream = 3;
constexpr std::uint64_t kAwarenessStream = 4;

void reject_partition_encoder(const Embedder& e) {
  if (std::holds_alternative<PartitionEncoder>(e)) {
    throw Error(ErrorCode::InvalidArgument, "the partition encoder is defined on a fixed node set and cannot be audited");
  }
}

Json pair_json(std::size_t i, std::size_t j) { return Json::array({i + 1, j + 1}); }

FeaturedNetwork two_node(double alpha, const FeatureSpace& space, const Feature& s, const Feature& t) {
  return validate_network(Matrix{{0.0, alpha}, {alpha, 0.0}}, space, {s, t});
}

EigenvectorCentrality spectral_config(const Embedder& e) {
  if (const auto* c = std::get_if<EigenvectorCentrality>(&e)) return *c;
  return {};
}

}  // namespace

std::string_view to_string(PropertyId p) noexcept {
  switch (p) {
    case PropertyId::SelfContained: return "self-contained";
    case PropertyId::Consistent: return "consistent";
    case PropertyId::GraphAware: return "graph-aware";
    case PropertyId::WeaklyGraphAware: return "weakly-graph-aware";
    case PropertyId::InjectivelyConsistent: return "injectively-consistent";
  }
  return "unknown";
}

PropertyId parse_property(std::string_view name) {
  for (PropertyId p : {PropertyId::SelfContained, PropertyId::Consistent, PropertyId::GraphAware,
                       PropertyId::WeaklyGraphAware, PropertyId::InjectivelyConsistent}) {
    if (to_string(p) == name) return p;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown property '" + std::string(name) + "'");
}

std::vector<PropertyId> implied_properties(PropertyId p) {
  switch (p) {
    case PropertyId::Consistent: return {PropertyId::Consistent, PropertyId::InjectivelyConsistent};
    case PropertyId::GraphAware: return {PropertyId::GraphAware, PropertyId::WeaklyGraphAware};
    default: return {p};
  }
}

std::string_view to_string(VerdictKind v) noexcept {
  switch (v) {
    case VerdictKind::HoldsOnSamples: return "HoldsOnSamples";
    case VerdictKind::ViolatedWithWitness: return "ViolatedWithWitness";
    case VerdictKind::WitnessFound: return "WitnessFound";
    case VerdictKind::SearchExhausted: return "SearchExhausted";
  }
  return "unknown";
}

Json to_json(const AuditVerdict& v) {
  Json out;
  out["embedder"] = v.embedder;
  out["property"] = std::string(to_string(v.property));
  out["verdict"] = std::string(to_string(v.verdict));
  out["witness"] = v.witness;
  out["trials"] = v.trials;
  out["seed"] = v.seed;
  out["evidence"] = v.evidence;
  return out;
}

// --- self-containedness -----------------------------------------------------

AuditVerdict check_self_contained(const Embedder& e, std::size_t trials, std::uint64_t seed) {
  reject_partition_encoder(e);
  const bool real = is_real_valued(e);
  AuditVerdict out{embedder_name(e), PropertyId::SelfContained, VerdictKind::HoldsOnSamples, 0, seed, nullptr, nullptr};

  constexpr std::array<double, 5> kAlphas{0.25, 0.5, 1.0, 2.0, 3.5};
  const FeatureSpace plane = FeatureSpace::vector(2);
  std::vector<Feature> pool;
  {
    Rng rng(derive_seed(seed, kSelfContainedPoolStream, 0));
    for (int k = 0; k < 3; ++k) pool.push_back(random_feature(rng, plane));
  }

  struct Seen {
    ExtReal phi;
    Json network;
  };
  std::map<std::string, Seen> seen;
  std::size_t equals_alpha = 0, equals_inf = 0, equals_zero = 0;

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, kSelfContainedStream, t));
    const bool pooled = t % 2 == 0;
    const bool vector = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    const FeatureSpace space = vector ? plane : FeatureSpace::point();
    std::size_t ai = 0, si = 0, ti = 0;
    double alpha;
    Feature s, u;
    if (pooled) {
      ai = uniform_index(rng, 0, kAlphas.size() - 1);
      alpha = kAlphas[ai];
      if (vector) {
        si = uniform_index(rng, 0, pool.size() - 1);
        ti = uniform_index(rng, 0, pool.size() - 1);
        s = pool[si];
        u = pool[ti];
      }
    } else {
      alpha = uniform(rng, 0.1, 5.0);
      s = random_feature(rng, space);
      u = random_feature(rng, space);
    }

    const FeaturedNetwork forward = two_node(alpha, space, s, u);
    const FeaturedNetwork swapped = two_node(alpha, space, u, s);
    const ExtReal phi = embed(e, forward)(0, 1);
    const ExtReal phi_swapped = embed(e, swapped)(0, 1);
    out.trials = t + 1;

    if (phi == ExtReal(alpha)) ++equals_alpha;
    if (phi.is_infinite()) ++equals_inf;
    if (phi == ExtReal(0.0)) ++equals_zero;

    if (differs(phi, phi_swapped, real)) {
      out.verdict = VerdictKind::ViolatedWithWitness;
      out.witness = {{"reason", "relabeling the two nodes changed phi"},
                     {"trial", t},
                     {"network", to_json(forward)},
                     {"relabeled", to_json(swapped)},
                     {"phi", to_json(phi)},
                     {"phi_relabeled", to_json(phi_swapped)}};
      break;
    }
    if (pooled) {
      const std::string key = std::string(vector ? "v" : "p") + ":" + std::to_string(std::min(si, ti)) + "," +
                              std::to_string(std::max(si, ti)) + ":" + std::to_string(ai);
      auto [it, fresh] = seen.try_emplace(key, Seen{phi, to_json(forward)});
      if (!fresh && differs(it->second.phi, phi, real)) {
        out.verdict = VerdictKind::ViolatedWithWitness;
        out.witness = {{"reason", "equal features and alpha, different phi"},
                       {"trial", t},
                       {"network", it->second.network},
                       {"phi", to_json(it->second.phi)},
                       {"repeat", to_json(forward)},
                       {"phi_repeat", to_json(phi)}};
        break;
      }
    }
  }
  out.evidence = {{"g_matches", {{"alpha", equals_alpha}, {"inf", equals_inf}, {"zero", equals_zero}}},
                  {"distinct_pooled_inputs", seen.size()}};
  return out;
}

// --- consistency ------------------------------------------------------------

namespace {

struct Violation {
  std::size_t i, j;
  ExtReal phi1, phi2;
};

std::optional<Violation> first_consistency_violation(const Embedding& phi1, const Embedding& phi2, const NodeMap& m,
                                                     bool real) {
  const std::size_t n = m.source_size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const ExtReal a = phi1(i, j);
      const ExtReal b = phi2(m(i), m(j));
      if (strictly_less(a, b, real)) return Violation{i, j, a, b};
    }
  }
  return std::nullopt;
}

}  // namespace

AuditVerdict check_consistency(const Embedder& e, std::size_t trials, std::uint64_t seed,
                               const ConsistencyOptions& options) {
  reject_partition_encoder(e);
  const bool real = is_real_valued(e);
  const PropertyId property = options.injective_only ? PropertyId::InjectivelyConsistent : PropertyId::Consistent;
  AuditVerdict out{embedder_name(e), property, VerdictKind::HoldsOnSamples, 0, seed, nullptr, nullptr};
  std::size_t fixtures = 0;

  // Returns true once a violation has been recorded.
  auto evaluate = [&](const CodniInstance& inst, Json origin) {
    ++out.trials;
    const Embedding phi1 = embed(e, inst.source);
    const Embedding phi2 = embed(e, inst.target);
    const auto v = first_consistency_violation(phi1, phi2, inst.map, real);
    if (!v) return false;
    out.verdict = VerdictKind::ViolatedWithWitness;
    out.witness = {{"origin", std::move(origin)},
                   {"n1", to_json(inst.source)},
                   {"n2", to_json(inst.target)},
                   {"map", to_json(inst.map)},
                   {"injective", is_injective(inst.map)},
                   {"phi1", to_json(phi1)},
                   {"phi2", to_json(phi2)},
                   {"pair", pair_json(v->i, v->j)},
                   {"image", pair_json(inst.map(v->i), inst.map(v->j))},
                   {"phi1_pair", to_json(v->phi1)},
                   {"phi2_image", to_json(v->phi2)}};
    return true;
  };

  if (options.include_fixtures) {
    if (!options.injective_only) {
      auto tri = triangle_consistency_counterexample(1.0);
      ++fixtures;
      if (evaluate({tri.source, tri.target, tri.map}, "fixture:triangle-counterexample")) {
        out.evidence = {{"fixtures_checked", fixtures}, {"random_checked", 0}};
        return out;
      }
    }
    auto spec = spectral_consistency_counterexample(spectral_config(e));
    ++fixtures;
    if (evaluate({spec.pair, spec.triple, spec.inclusion}, "fixture:spectral-counterexample")) {
      out.evidence = {{"fixtures_checked", fixtures}, {"random_checked", 0}};
      return out;
    }
  }

  CodniBounds bounds = options.bounds;
  bounds.injective = options.injective_only;
  std::size_t checked = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = derive_seed(seed, kConsistencyStream, t);
    const CodniInstance inst = random_codni_instance(s, bounds);
    ++checked;
    if (evaluate(inst, Json{{"kind", "random"}, {"trial", t}, {"instance_seed", s}})) break;
  }
  out.evidence = {{"fixtures_checked", fixtures}, {"random_checked", checked}};
  return out;
}

// --- graph-awareness --------------------------------------------------------

AuditVerdict check_graph_awareness(const Embedder& e, const AwarenessSearch& search, std::uint64_t seed) {
  reject_partition_encoder(e);
  if (search.sampler.min_n < 3) throw Error(ErrorCode::InvalidArgument, "awareness search needs networks of >= 3 nodes");
  const bool real = is_real_valued(e);
  const bool dij = search.family == PerturbationFamily::Kind::Dij;
  AuditVerdict out{embedder_name(e), dij ? PropertyId::GraphAware : PropertyId::WeaklyGraphAware,
                   VerdictKind::WitnessFound, 0, seed, nullptr, nullptr};
  const EigenvectorCentrality spectral = spectral_config(e);

  std::size_t witnessed = 0, exhausted = 0;
  std::map<std::string, std::size_t> by_construction;
  Json first_witness = nullptr, first_exhausted = nullptr;

  for (std::size_t b = 0; b < search.base_networks; ++b) {
    Rng rng(derive_seed(seed, kAwarenessStream, b));
    const FeaturedNetwork net = random_network(rng, search.sampler);
    const Embedding phi = embed(e, net);
    const std::size_t n = net.size();

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (search.pairs == PairSelection::AllPairs) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    } else {
      std::pair<std::size_t, std::size_t> best{0, 1};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (net.d(i, j) < net.d(best.first, best.second)) best = {i, j};
      pairs.push_back(best);
    }

    for (auto [i, j] : pairs) {
      PerturbationFamily family{search.family, i, j, search.min_factor, search.max_factor, search.fresh_scale};
      std::vector<std::pair<std::string, std::function<Matrix()>>> candidates;
      if (search.use_constructions) {
        if (!dij) candidates.emplace_back("shortcut", [&] { return shortcut_witness(net, i, j).perturbed.d(); });
        candidates.emplace_back("triangle-raise", [&] { return triangle_awareness_witness(net, i, j).perturbed.d(); });
        candidates.emplace_back("spectral-balanced",
                                [&] { return spectral_awareness_witness(net, i, j, spectral).balanced.network.d(); });
        candidates.emplace_back("spectral-skewed",
                                [&] { return spectral_awareness_witness(net, i, j, spectral).skewed.network.d(); });
      }
      for (std::size_t k = 0; k < search.samples_per_pair; ++k) {
        candidates.emplace_back("random", [&] { return family.sample(net, rng); });
      }

      std::size_t tried = 0;
      bool found = false;
      for (auto& [name, make] : candidates) {
        Matrix d_prime;
        try {
          d_prime = make();
        } catch (const Error&) {
          continue;  // construction not applicable to this network
        }
        family.require_member(net, d_prime);
        ++tried;
        const FeaturedNetwork perturbed = net.with_dissimilarities(d_prime);
        const ExtReal after = embed(e, perturbed)(i, j);
        if (differs(phi(i, j), after, real)) {
          found = true;
          ++witnessed;
          ++by_construction[name];
          if (first_witness.is_null()) {
            first_witness = {{"base_index", b},
                             {"network", to_json(net)},
                             {"pair", pair_json(i, j)},
                             {"construction", name},
                             {"d_prime", to_json(d_prime)},
                             {"phi", to_json(phi(i, j))},
                             {"phi_prime", to_json(after)}};
          }
          break;
        }
      }
      if (!found) {
        ++exhausted;
        if (first_exhausted.is_null()) {
          first_exhausted = {{"base_index", b},
                             {"network", to_json(net)},
                             {"pair", pair_json(i, j)},
                             {"phi", to_json(phi(i, j))},
                             {"candidates_tried", tried}};
        }
      }
      ++out.trials;
    }
  }

  Json constructions = Json::object();
  for (const auto& [name, count] : by_construction) constructions[name] = count;
  out.evidence = {{"pairs_checked", out.trials},
                  {"pairs_witnessed", witnessed},
                  {"pairs_exhausted", exhausted},
                  {"witnesses_by_construction", constructions}};
  if (exhausted == 0 && witnessed > 0) {
    out.witness = first_witness;
  } else {
    out.verdict = VerdictKind::SearchExhausted;
    out.witness = first_exhausted;
  }
  return out;
}

// --- driver -----------------------------------------------------------------

std::vector<AuditVerdict> audit(const Embedder& e, std::span<const PropertyId> properties,
                                const AuditOptions& options, std::uint64_t seed) {
  std::vector<AuditVerdict> out;
  for (PropertyId p : properties) {
    switch (p) {
      case PropertyId::SelfContained:
        out.push_back(check_self_contained(e, options.trials, seed));
        break;
      case PropertyId::Consistent:
        out.push_back(check_consistency(e, options.trials, seed, {.injective_only = false}));
        break;
      case PropertyId::InjectivelyConsistent:
        out.push_back(check_consistency(e, options.trials, seed, {.injective_only = true}));
        break;
      case PropertyId::GraphAware: {
        AwarenessSearch s = options.awareness;
        s.family = PerturbationFamily::Kind::Dij;
        out.push_back(check_graph_awareness(e, s, seed));
        break;
      }
      case PropertyId::WeaklyGraphAware: {
        AwarenessSearch s = options.awareness;
        s.family = PerturbationFamily::Kind::Cij;
        out.push_back(check_graph_awareness(e, s, seed));
        break;
      }
    }
  }
  return out;
}

bool impossibility_shadow_holds(std::span<const AuditVerdict> verdicts) {
  std::map<std::string, std::array<bool, 3>> seen;
  for (const auto& v : verdicts) {
    auto& flags = seen[v.embedder];
    if (v.property == PropertyId::SelfContained && v.verdict == VerdictKind::HoldsOnSamples) flags[0] = true;
    if (v.property == PropertyId::Consistent && v.verdict == VerdictKind::HoldsOnSamples) flags[1] = true;
    if (v.property == PropertyId::GraphAware && v.verdict == VerdictKind::WitnessFound) flags[2] = true;
  }
  return std::none_of(seen.begin(), seen.end(), [](const auto& kv) {
    return kv.second[0] && kv.second[1] && kv.second[2];
  });
}

}  // namespace embax
