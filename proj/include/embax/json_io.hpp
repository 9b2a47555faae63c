#pragma once

// JSON encodings for networks, embeddings, maps and eigen diagnostics.
//
// Node labels in JSON are 1-based. +inf is written as the string "inf".
//
// Network: {"n": int, "d": [[...]], "feature_space": {"kind": "point"|"vector",
//           "dim": int}, "features": [[...]] | null}
// Embedding: {"n": int, "phi": [[...]], "diagnostics": {...}}  (diagnostics optional)

#include <filesystem>
#include <optional>

#include "json.hpp"

#include "embax/embedders.hpp"
#include "embax/maps.hpp"
#include "embax/netcore.hpp"
#include "embax/spectral.hpp"

namespace embax {

using Json = nlohmann::ordered_json;

Json to_json(const ExtReal& x);
ExtReal ext_real_from_json(const Json& j);

Json to_json(const Matrix& m);
Json to_json(const FeatureSpace& space);
Json to_json(const FeaturedNetwork& network);
Json to_json(const Embedding& e);
Json to_json(const NodeMap& m);
Json to_json(const EigenDiagnostics& diag);
Json partition_to_json(const Partition& p);

/// Schema problems raise ParseError; matrix problems raise the
/// validate_network error codes.
FeaturedNetwork network_from_json(const Json& j);
Embedding embedding_from_json(const Json& j);

Json embedding_document(const Embedding& e, const std::optional<Json>& diagnostics = std::nullopt);

/// FileNotFound / ParseError.
Json read_json_file(const std::filesystem::path& path);
/// Two-space indent plus trailing newline. Throws InvalidArgument when the
/// file cannot be written.
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace embax
