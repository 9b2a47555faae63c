#include "embax/json_io.hpp"

#include <fstream>
#include <string>

#include "embax/error.hpp"

namespace embax {
namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t read_count(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    parse_error(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<double> read_number_row(const Json& row, const std::string& where) {
  if (!row.is_array()) parse_error(where + " must be an array");
  std::vector<double> out;
  out.reserve(row.size());
  for (const auto& x : row) {
    if (!x.is_number()) parse_error(where + " must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

Json to_json(const ExtReal& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

ExtReal ext_real_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtReal::infinity();
  if (!j.is_number()) parse_error("expected a number or \"inf\"");
  return ExtReal(j.get<double>());
}

Json to_json(const Matrix& m) { return m.to_rows(); }

Json to_json(const FeatureSpace& space) {
  if (space.kind() == FeatureSpace::Kind::Point) return Json{{"kind", "point"}};
  return Json{{"kind", "vector"}, {"dim", space.dim()}};
}

Json to_json(const FeaturedNetwork& network) {
  Json j;
  j["n"] = network.size();
  j["d"] = to_json(network.d());
  j["feature_space"] = to_json(network.space());
  if (network.space().kind() == FeatureSpace::Kind::Point) {
    j["features"] = nullptr;
  } else {
    j["features"] = network.features();
  }
  return j;
}

Json to_json(const Embedding& e) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < e.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < e.size(); ++k) row.push_back(to_json(e(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const NodeMap& m) {
  Json image = Json::array();
  for (std::size_t v : m.image()) image.push_back(v + 1);
  return Json{{"image", std::move(image)}};
}

Json to_json(const EigenDiagnostics& diag) {
  Json j;
  j["lambda"] = diag.lambda;
  j["u"] = diag.u;
  j["iterations"] = diag.iterations;
  j["residual"] = diag.residual;
  j["shift"] = diag.shift;
  j["gap_estimate"] = diag.gap_estimate ? Json(*diag.gap_estimate) : Json(nullptr);
  j["non_unique_warning"] = diag.non_unique_warning;
  return j;
}

Json partition_to_json(const Partition& p) {
  Json blocks = Json::array();
  for (const auto& block : p) {
    Json b = Json::array();
    for (std::size_t v : block) b.push_back(v + 1);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

FeaturedNetwork network_from_json(const Json& j) {
  const std::size_t n = read_count(j, "n");
  const Json& d_json = field(j, "d");
  if (!d_json.is_array()) parse_error("field \"d\" must be an array of rows");
  std::vector<std::vector<double>> rows;
  for (std::size_t r = 0; r < d_json.size(); ++r) {
    rows.push_back(read_number_row(d_json[r], "row " + std::to_string(r + 1) + " of \"d\""));
  }
  if (rows.size() != n) {
    throw Error(ErrorCode::MalformedMatrix,
                "\"n\" is " + std::to_string(n) + " but \"d\" has " + std::to_string(rows.size()) + " rows");
  }
  Matrix d = Matrix::from_rows(rows);

  const Json& space_json = field(j, "feature_space");
  const Json& kind = field(space_json, "kind");
  if (!kind.is_string()) parse_error("feature_space.kind must be a string");
  FeatureSpace space = FeatureSpace::point();
  if (kind == "vector") {
    const std::size_t dim = read_count(space_json, "dim");
    if (dim == 0) parse_error("feature_space.dim must be positive");
    space = FeatureSpace::vector(dim);
  } else if (kind != "point") {
    parse_error("feature_space.kind must be \"point\" or \"vector\"");
  }

  std::vector<Feature> features;
  auto it = j.find("features");
  if (it == j.end() || it->is_null()) {
    if (space.kind() == FeatureSpace::Kind::Vector) parse_error("vector feature space needs \"features\"");
    features.assign(n, Feature{});
  } else {
    if (!it->is_array()) parse_error("field \"features\" must be an array or null");
    for (std::size_t r = 0; r < it->size(); ++r) {
      features.push_back(read_number_row((*it)[r], "feature " + std::to_string(r + 1)));
    }
  }
  return validate_network(d, space, std::move(features));
}

Embedding embedding_from_json(const Json& j) {
  const std::size_t n = read_count(j, "n");
  const Json& phi = field(j, "phi");
  if (!phi.is_array() || phi.size() != n) parse_error("field \"phi\" must have n rows");
  std::vector<ExtReal> values;
  values.reserve(n * n);
  for (const auto& row : phi) {
    if (!row.is_array() || row.size() != n) parse_error("every row of \"phi\" must have n entries");
    for (const auto& x : row) values.push_back(ext_real_from_json(x));
  }
  return Embedding(n, std::move(values));
}

Json embedding_document(const Embedding& e, const std::optional<Json>& diagnostics) {
  Json j;
  j["n"] = e.size();
  j["phi"] = to_json(e);
  if (diagnostics) j["diagnostics"] = *diagnostics;
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileNotFound, path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace embax
