// embax: embed featured dissimilarity networks, audit embedders against the
// axioms and replay the known constructions. Exit codes: 0 success, 1 audit
// violation under --expect-hold, 2 input errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "embax/axioms.hpp"
#include "embax/constructions.hpp"
#include "embax/embedders.hpp"
#include "embax/error.hpp"
#include "embax/json_io.hpp"

namespace {

using namespace embax;

struct EmbedderFlags {
  std::string name = "single-linkage";
  std::string kernel = "exp-sum";
  std::string diag = "zero";
  double tol = 1e-12;
  std::size_t max_iter = 10'000;
  std::uint64_t seed = 0;

  void attach(CLI::App& cmd, bool with_seed) {
    cmd.add_option("--embedder", name, "single-linkage, triangle-linkage or eigenvector")
        ->check(CLI::IsMember({"single-linkage", "triangle-linkage", "eigenvector"}));
    cmd.add_option("--kernel", kernel, "kernel form (eigenvector)")->check(CLI::IsMember({"exp-sum"}));
    cmd.add_option("--diag", diag, "adjacency diagonal (eigenvector)")->check(CLI::IsMember({"zero", "kappa"}));
    cmd.add_option("--tol", tol, "power iteration tolerance");
    cmd.add_option("--max-iter", max_iter, "power iteration cap");
    if (with_seed) cmd.add_option("--seed", seed, "seed");
  }

  EigenvectorCentrality spectral() const {
    EigenvectorCentrality c;
    c.solver.tol = tol;
    c.solver.max_iter = max_iter;
    c.solver.seed = seed;
    c.diagonal = diag == "kappa" ? AdjacencyDiagonal::Kappa : AdjacencyDiagonal::Zero;
    c.solver.validate();
    return c;
  }

  Embedder build() const {
    if (name == "triangle-linkage") return TriangleLinkage{};
    if (name == "eigenvector") return spectral();
    return SingleLinkage{};
  }
};

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(out, j);
  }
}

Json codni_json(const CodniResult& r) {
  Json j{{"holds", r.holds}, {"first_violation", nullptr}};
  if (r.first_violation) {
    const auto& v = *r.first_violation;
    j["first_violation"] = {{"pair", {v.i + 1, v.j + 1}},
                            {"feature_expanded", v.feature_expanded},
                            {"dissimilarity_increased", v.dissimilarity_increased}};
  }
  return j;
}

Json realization_json(const SpectralRealization& r) {
  return {{"target", to_json(r.target)},     {"network", to_json(r.network)},
          {"realized", to_json(r.realized)}, {"frobenius", r.frobenius},
          {"phi_12", to_json(r.phi)},        {"diagnostics", to_json(r.diagnostics)}};
}

Json trace_json(const TraceReport& t) {
  Json samples = Json::array();
  for (const auto& s : t.samples) {
    samples.push_back({{"d1", to_json(s.d1)},
                       {"phi", to_json(s.phi_base)},
                       {"phi1", to_json(s.phi_perturbed)},
                       {"g", to_json(s.g_value)},
                       {"inclusion_bound_base", s.inclusion_bound_base},
                       {"collapse_bound_base", s.collapse_bound_base},
                       {"inclusion_bound", s.inclusion_bound},
                       {"collapse_bound", s.collapse_bound},
                       {"equality", s.equality}});
  }
  return {{"construction", "thm1"},
          {"embedder", t.embedder},
          {"pair", {t.i + 1, t.j + 1}},
          {"delta", t.delta},
          {"metric_only", t.metric_only},
          {"base", to_json(t.base)},
          {"restricted", to_json(t.restricted)},
          {"inclusion", to_json(t.inclusion)},
          {"collapse", to_json(t.collapse)},
          {"equality_always", t.equality_always},
          {"chain_always_holds", t.chain_always_holds},
          {"first_broken_sample", t.first_broken_sample ? Json(*t.first_broken_sample + 1) : Json(nullptr)},
          {"first_broken_inequality", t.first_broken_inequality ? Json(*t.first_broken_inequality) : Json(nullptr)},
          {"samples", samples}};
}

FeaturedNetwork equilateral(double delta) {
  return point_network(Matrix{{0, delta, delta}, {delta, 0, delta}, {delta, delta, 0}});
}

struct ReplayFlags {
  std::string id;
  double delta = 1.0;
  std::size_t samples = 100;
  std::size_t trials = 1000;
  bool metric_only = false;
  std::string out;
  EmbedderFlags embedder;
};

Json replay(const ReplayFlags& f) {
  if (!(f.delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "--delta must be positive");
  const std::vector<Feature> points(3, Feature{});
  TraceConfig trace{f.delta, f.samples, f.metric_only, 3.0};

  if (f.id == "prop1") {
    Json g = Json::array();
    for (double alpha : {0.5 * f.delta, f.delta, 2.0 * f.delta}) {
      const auto two = point_network(Matrix{{0, alpha}, {alpha, 0}});
      g.push_back({{"alpha", alpha}, {"phi_12", to_json(single_linkage(two)(0, 1))}});
    }
    return {{"construction", "prop1"},
            {"embedder", "single-linkage"},
            {"two_node", g},
            {"trace", trace_json(theorem1_trace(SingleLinkage{}, FeatureSpace::point(), points, trace, f.embedder.seed))}};
  }
  if (f.id == "prop2") {
    const auto c = triangle_consistency_counterexample(f.delta);
    const auto two = point_network(Matrix{{0, f.delta}, {f.delta, 0}});
    const auto w = triangle_awareness_witness(equilateral(f.delta), 0, 1);
    Json raised = Json::array();
    for (auto k : w.raised) raised.push_back(k + 1);
    return {{"construction", "prop2"},
            {"embedder", "triangle-linkage"},
            {"delta", f.delta},
            {"two_node_phi_12", to_json(triangle_linkage(two)(0, 1))},
            {"consistency",
             {{"n1", to_json(c.source)},
              {"n2", to_json(c.target)},
              {"map", to_json(c.map)},
              {"codni", codni_json(c.codni)},
              {"injective", c.injective},
              {"phi1", to_json(c.phi_source)},
              {"phi2", to_json(c.phi_target)},
              {"phi1_12", to_json(c.phi_source(0, 1))},
              {"phi2_image", to_json(c.phi_target(c.map(0), c.map(1)))},
              {"violated", c.violated}}},
            {"awareness",
             {{"network", to_json(equilateral(f.delta))},
              {"pair", {1, 2}},
              {"delta", w.delta},
              {"raised", raised},
              {"perturbed", to_json(w.perturbed)},
              {"phi_before", to_json(w.phi_before)},
              {"phi_after", to_json(w.phi_after)}}}};
  }
  if (f.id == "prop3") {
    const EigenvectorCentrality config = f.embedder.spectral();
    const auto c = spectral_consistency_counterexample(config);
    const auto w = spectral_awareness_witness(3, config, FeatureSpace::point(), points);
    return {{"construction", "prop3"},
            {"embedder", "eigenvector"},
            {"consistency",
             {{"n1", to_json(c.pair)},
              {"n2", to_json(c.triple)},
              {"map", to_json(c.inclusion)},
              {"codni", codni_json(c.codni)},
              {"phi1_12", to_json(c.phi_pair)},
              {"phi2_12", to_json(c.phi_triple)},
              {"pair_diagnostics", to_json(c.pair_diagnostics)},
              {"triple_diagnostics", to_json(c.triple_diagnostics)},
              {"violated", c.violated}}},
            {"awareness",
             {{"pair", {w.i + 1, w.j + 1}},
              {"third", w.third + 1},
              {"alpha", w.alpha},
              {"beta", w.beta},
              {"filler", w.filler},
              {"phi_base", to_json(w.phi_base)},
              {"balanced", realization_json(w.balanced)},
              {"skewed", realization_json(w.skewed)}}}};
  }
  if (f.id == "thm1") {
    return trace_json(theorem1_trace(f.embedder.build(), FeatureSpace::point(), points, trace, f.embedder.seed));
  }
  if (f.id == "weak-aware") {
    const auto net = equilateral(f.delta);
    const auto w = shortcut_witness(net, 0, 1);
    return {{"construction", "weak-aware"},
            {"embedder", "single-linkage"},
            {"network", to_json(net)},
            {"pair", {1, 2}},
            {"alpha", w.alpha},
            {"via", w.via + 1},
            {"perturbed", to_json(w.perturbed)},
            {"phi_before", to_json(single_linkage(net)(0, 1))},
            {"phi_after", to_json(single_linkage(w.perturbed)(0, 1))}};
  }
  // inj-consistent
  AuditVerdict v = check_consistency(TriangleLinkage{}, f.trials, f.embedder.seed, {.injective_only = true});
  return {{"construction", "inj-consistent"}, {"verdict", to_json(v)}};
}

int run(int argc, char** argv) {
  CLI::App app{"Featured network embeddings and their axioms"};
  app.require_subcommand(1, 1);

  std::string in, out;
  EmbedderFlags embed_flags;
  auto* embed_cmd = app.add_subcommand("embed", "embed a network file");
  embed_cmd->add_option("--in", in, "network JSON")->required();
  embed_cmd->add_option("--out", out, "embedding JSON (stdout when omitted)");
  embed_flags.attach(*embed_cmd, true);

  EmbedderFlags audit_flags;
  std::vector<std::string> properties;
  std::size_t trials = 200;
  std::size_t base_networks = 50;
  bool expect_hold = false;
  std::string audit_out;
  auto* audit_cmd = app.add_subcommand("audit", "audit an embedder");
  audit_flags.attach(*audit_cmd, true);
  audit_cmd->add_option("--property", properties, "properties to check (repeatable, comma separated)")
      ->delimiter(',')
      ->required();
  audit_cmd->add_option("--trials", trials, "random trials per sampled property");
  audit_cmd->add_option("--base-networks", base_networks, "base networks for the awareness search");
  audit_cmd->add_flag("--expect-hold", expect_hold, "exit 1 when a property is violated");
  audit_cmd->add_option("--out", audit_out, "report JSON (stdout when omitted)");

  ReplayFlags replay_flags;
  auto* replay_cmd = app.add_subcommand("replay", "replay a known construction");
  replay_cmd->add_option("id", replay_flags.id, "prop1, prop2, prop3, thm1, weak-aware, inj-consistent")
      ->required()
      ->check(CLI::IsMember({"prop1", "prop2", "prop3", "thm1", "weak-aware", "inj-consistent"}));
  replay_cmd->add_option("--delta", replay_flags.delta, "side length");
  replay_cmd->add_option("--samples", replay_flags.samples, "trace samples");
  replay_cmd->add_option("--trials", replay_flags.trials, "random instances (inj-consistent)");
  replay_cmd->add_flag("--metric-only", replay_flags.metric_only, "keep sampled networks metric (thm1, prop1)");
  replay_cmd->add_option("--out", replay_flags.out, "trace JSON (stdout when omitted)");
  replay_flags.embedder.attach(*replay_cmd, true);

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "check a network file");
  validate_cmd->add_option("file", validate_path, "network JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*embed_cmd) {
      const FeaturedNetwork net = network_from_json(read_json_file(in));
      const Embedder e = embed_flags.build();
      if (const auto* c = std::get_if<EigenvectorCentrality>(&e)) {
        const auto r = eigenvector_embedding(net, *c);
        emit(embedding_document(r.embedding, to_json(r.diagnostics)), out);
      } else {
        emit(embedding_document(embed(e, net)), out);
      }
      return 0;
    }
    if (*audit_cmd) {
      std::vector<PropertyId> ids;
      for (const auto& p : properties) ids.push_back(parse_property(p));
      AuditOptions options;
      options.trials = trials;
      options.awareness.base_networks = base_networks;
      const auto verdicts = audit(audit_flags.build(), ids, options, audit_flags.seed);
      Json report = Json::array();
      bool violated = false;
      for (const auto& v : verdicts) {
        report.push_back(to_json(v));
        violated = violated || v.verdict == VerdictKind::ViolatedWithWitness;
      }
      emit(report, audit_out);
      return expect_hold && violated ? 1 : 0;
    }
    if (*replay_cmd) {
      emit(replay(replay_flags), replay_flags.out);
      return 0;
    }
    network_from_json(read_json_file(validate_path));
    std::cout << "OK\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
