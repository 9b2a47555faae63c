#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace embax {

// Stable error identifiers. The CLI prints the name verbatim, so never rename.
enum class ErrorCode {
  AsymmetricMatrix,
  NonzeroDiagonal,
  NonpositiveOffDiagonal,
  FeatureLengthMismatch,
  NonFiniteEntry,
  MalformedMatrix,
  EmptySubset,
  DuplicateNode,
  OutOfRange,
  DimensionMismatch,
  FeatureSpaceMismatch,
  BadIndices,
  GenerationFailure,
  PowerIterationDiverged,
  NonpositiveLeadingEigenvalue,
  NotAPartition,
  NonpositiveEpsilon,
  NotAPartitionEncoding,
  DegenerateInput,
  KernelNotInvertibleAtValue,
  CodniAssertionFailed,
  InvalidEmbedding,
  InvalidArgument,
  FileNotFound,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace embax
