#include "fbas/error.hpp"

namespace fbas {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEmptyPattern: return "EmptyPattern";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kInvalidProbability: return "InvalidProbability";
    case ErrorCode::kInvalidScore: return "InvalidScore";
    case ErrorCode::kInvalidTable: return "InvalidTable";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kMatcherDisagreement: return "MatcherDisagreement";
  }
  return "Unknown";
}

}  // namespace fbas
