#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "embax/axioms.hpp"
#include "embax/error.hpp"

using namespace embax;

TEST_CASE("property names") {
  for (PropertyId p : {PropertyId::SelfContained, PropertyId::Consistent, PropertyId::GraphAware,
                       PropertyId::WeaklyGraphAware, PropertyId::InjectivelyConsistent}) {
    CHECK(parse_property(to_string(p)) == p);
  }
  CHECK_THROWS_AS(parse_property("graph-awareness"), Error);
  const auto g = implied_properties(PropertyId::GraphAware);
  CHECK(std::find(g.begin(), g.end(), PropertyId::WeaklyGraphAware) != g.end());
  const auto c = implied_properties(PropertyId::Consistent);
  CHECK(std::find(c.begin(), c.end(), PropertyId::InjectivelyConsistent) != c.end());
}

TEST_CASE("self-containedness") {
  const auto sl = check_self_contained(SingleLinkage{}, 200, 1);
  CHECK(sl.verdict == VerdictKind::HoldsOnSamples);
  CHECK(sl.evidence["g_matches"]["alpha"] == 200);
  CHECK(check_self_contained(TriangleLinkage{}, 200, 1).evidence["g_matches"]["inf"] == 200);
  CHECK(check_self_contained(EigenvectorCentrality{}, 200, 1).verdict == VerdictKind::HoldsOnSamples);
}

TEST_CASE("consistency verdicts") {
  CHECK(check_consistency(SingleLinkage{}, 200, 3).verdict == VerdictKind::HoldsOnSamples);

  const auto tl = check_consistency(TriangleLinkage{}, 200, 3);
  CHECK(tl.verdict == VerdictKind::ViolatedWithWitness);
  CHECK(tl.witness["injective"] == false);
  CHECK(tl.witness["phi1_pair"] == 1.0);
  CHECK(tl.witness["phi2_image"] == 2.0);

  const auto tl_inj = check_consistency(TriangleLinkage{}, 200, 3, {.injective_only = true});
  CHECK(tl_inj.property == PropertyId::InjectivelyConsistent);
  CHECK(tl_inj.verdict == VerdictKind::HoldsOnSamples);

  const auto ev = check_consistency(EigenvectorCentrality{}, 50, 3, {.injective_only = true});
  CHECK(ev.verdict == VerdictKind::ViolatedWithWitness);

  SUBCASE("random instances alone also find the triangle-linkage violation") {
    const auto r = check_consistency(TriangleLinkage{}, 500, 3, {.include_fixtures = false});
    CHECK(r.verdict == VerdictKind::ViolatedWithWitness);
    CHECK(r.witness["origin"]["kind"] == "random");
  }
}

TEST_CASE("graph-awareness verdicts") {
  AwarenessSearch s;
  s.base_networks = 20;
  s.samples_per_pair = 10;
  CHECK(check_graph_awareness(TriangleLinkage{}, s, 0).verdict == VerdictKind::WitnessFound);
  CHECK(check_graph_awareness(EigenvectorCentrality{}, s, 0).verdict == VerdictKind::WitnessFound);

  const auto sl = check_graph_awareness(SingleLinkage{}, s, 0);
  CHECK(sl.verdict == VerdictKind::SearchExhausted);
  CHECK_FALSE(sl.conclusive());
  CHECK(sl.witness.contains("network"));

  s.family = PerturbationFamily::Kind::Cij;
  const auto weak = check_graph_awareness(SingleLinkage{}, s, 0);
  CHECK(weak.property == PropertyId::WeaklyGraphAware);
  CHECK(weak.verdict == VerdictKind::WitnessFound);

  SUBCASE("random perturbations alone still witness triangle-linkage") {
    AwarenessSearch r;
    r.base_networks = 10;
    r.use_constructions = false;
    r.pairs = PairSelection::ArgminDissimilarity;
    CHECK(check_graph_awareness(TriangleLinkage{}, r, 0).verdict == VerdictKind::WitnessFound);
  }
}

TEST_CASE("audits are reproducible and reject the partition encoder") {
  const std::vector<PropertyId> props{PropertyId::SelfContained, PropertyId::Consistent};
  AuditOptions o;
  o.trials = 50;
  const auto a = audit(SingleLinkage{}, props, o, 9);
  const auto b = audit(SingleLinkage{}, props, o, 9);
  REQUIRE(a.size() == 2);
  CHECK(to_json(a[0]).dump() == to_json(b[0]).dump());
  CHECK(to_json(a[1]).dump() == to_json(b[1]).dump());
  CHECK(to_json(a[0]).contains("witness"));
  CHECK_THROWS_AS(check_self_contained(PartitionEncoder{{{0}}, 1.0}, 10, 0), Error);
}

TEST_CASE("impossibility shadow") {
  AuditVerdict p1{"x", PropertyId::SelfContained, VerdictKind::HoldsOnSamples, 1, 0, nullptr, nullptr};
  AuditVerdict p2{"x", PropertyId::Consistent, VerdictKind::HoldsOnSamples, 1, 0, nullptr, nullptr};
  AuditVerdict p3{"x", PropertyId::GraphAware, VerdictKind::WitnessFound, 1, 0, nullptr, nullptr};
  const std::vector<AuditVerdict> bad{p1, p2, p3};
  CHECK_FALSE(impossibility_shadow_holds(bad));
  p3.embedder = "y";
  const std::vector<AuditVerdict> split{p1, p2, p3};
  CHECK(impossibility_shadow_holds(split));
}
