#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "embax/error.hpp"
#include "embax/json_io.hpp"

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

}  // namespace

TEST_CASE("networks round trip") {
  const auto net = validate_network(Matrix{{0, 1.5}, {1.5, 0}}, FeatureSpace::vector(2), {{1, 2}, {3, 4}});
  const Json j = to_json(net);
  CHECK(j["n"] == 2);
  CHECK(j["feature_space"]["kind"] == "vector");
  CHECK(network_from_json(j) == net);

  const auto point = point_network(Matrix{{0, 2}, {2, 0}});
  CHECK(to_json(point)["features"].is_null());
  CHECK(network_from_json(to_json(point)) == point);
}

TEST_CASE("schema errors") {
  CHECK(code_of([] { network_from_json(Json::parse(R"({"n": 2})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          network_from_json(Json::parse(R"({"n": 3, "d": [[0,1],[1,0]], "feature_space": {"kind": "point"}})"));
        }) == ErrorCode::MalformedMatrix);
  CHECK(code_of([] {
          network_from_json(Json::parse(R"({"n": 2, "d": [[0,1],[2,0]], "feature_space": {"kind": "point"}})"));
        }) == ErrorCode::AsymmetricMatrix);
  CHECK(code_of([] {
          network_from_json(Json::parse(R"({"n": 2, "d": [[0,1],[1,0]], "feature_space": {"kind": "torus"}})"));
        }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          network_from_json(Json::parse(R"({"n": 2, "d": [[0,"x"],[1,0]], "feature_space": {"kind": "point"}})"));
        }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_json_file("/nonexistent/net.json"); }) == ErrorCode::FileNotFound);
}

TEST_CASE("embeddings carry inf as a string") {
  const auto inf = ExtReal::infinity();
  const Embedding e(2, {ExtReal(0.0), inf, inf, ExtReal(0.0)});
  const Json j = to_json(e);
  CHECK(j[0][1] == "inf");
  CHECK(embedding_from_json(embedding_document(e)) == e);
  const Json doc = embedding_document(e);
  CHECK(doc["n"] == 2);
  CHECK_FALSE(doc.contains("diagnostics"));
  CHECK(ext_real_from_json(Json("inf")).is_infinite());
  CHECK(ext_real_from_json(Json(2.5)) == ExtReal(2.5));
}

TEST_CASE("node maps use 1-based images") {
  CHECK(to_json(NodeMap(2, {0, 1, 1})) == Json::parse(R"({"image": [1, 2, 2]})"));
}

TEST_CASE("files round trip") {
  const auto path = std::filesystem::temp_directory_path() / "embax_json_io_test.json";
  const auto net = point_network(Matrix{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
  write_json_file(path, to_json(net));
  CHECK(network_from_json(read_json_file(path)) == net);
  std::filesystem::remove(path);
}
