#include "embax/error.hpp"

namespace embax {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::NonpositiveOffDiagonal: return "NonpositiveOffDiagonal";
    case ErrorCode::FeatureLengthMismatch: return "FeatureLengthMismatch";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::MalformedMatrix: return "MalformedMatrix";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FeatureSpaceMismatch: return "FeatureSpaceMismatch";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::GenerationFailure: return "GenerationFailure";
    case ErrorCode::PowerIterationDiverged: return "PowerIterationDiverged";
    case ErrorCode::NonpositiveLeadingEigenvalue: return "NonpositiveLeadingEigenvalue";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::NonpositiveEpsilon: return "NonpositiveEpsilon";
    case ErrorCode::NotAPartitionEncoding: return "NotAPartitionEncoding";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::KernelNotInvertibleAtValue: return "KernelNotInvertibleAtValue";
    case ErrorCode::CodniAssertionFailed: return "CodniAssertionFailed";
    case ErrorCode::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : " " + detail)),
      code_(code),
      detail_(detail) {}

}  // namespace embax
