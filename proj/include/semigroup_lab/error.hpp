#pragma once

#include <stdexcept>
#include <string>

namespace semigroup_lab {

enum class ErrorCode {
  EmptyGenerators,
  GcdNotOne,
  NonPositiveGenerator,
  ModulusNotInSemigroup,
  NoGaps,
  NotInSemigroup,
  NotEmbeddingDim3,
  NotEmbeddingDim4,
  NotPairwiseCoprime,
  ArrangementNotFound,
  CardinalityMismatch,
  ShapeMismatch,
  NonIntegralGenus,
  LengthMismatch,
  AssumptionViolated,
  HypothesisNotMet,
  IdentityViolated,
  UnknownFamily,
  OutOfRange,
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::NonPositiveGenerator: return "NonPositiveGenerator";
    case ErrorCode::ModulusNotInSemigroup: return "ModulusNotInSemigroup";
    case ErrorCode::NoGaps: return "NoGaps";
    case ErrorCode::NotInSemigroup: return "NotInSemigroup";
    case ErrorCode::NotEmbeddingDim3: return "NotEmbeddingDim3";
    case ErrorCode::NotEmbeddingDim4: return "NotEmbeddingDim4";
    case ErrorCode::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case ErrorCode::ArrangementNotFound: return "ArrangementNotFound";
    case ErrorCode::CardinalityMismatch: return "CardinalityMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::AssumptionViolated: return "AssumptionViolated";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::IdentityViolated: return "IdentityViolated";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

class SemigroupError : public std::runtime_error {
 public:
  SemigroupError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace semigroup_lab
