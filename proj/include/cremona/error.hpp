#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

enum class ErrorCode {
  UnknownPoint,
  UnknownParent,
  SatelliteViolation,
  IncidenceConflict,
  ExcessViolation,
  InvalidCurve,
  AlignedSupport,
  AlignedWithMaximal,
  AdherencePairViolation,
  NotPreConsistent,
  ShapeUnsupported,
  NonPositiveClass,
  NotInE,
  NotInVId,
  NotBoundaryClass,
  SupportNotContained,
  HypothesisViolated,
  StepUnavailable,
  UndefinedPushforward,
  ValidationFailure,
  IterationCap,
  ParseError,
  SchemaError,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-readable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::UnknownParent: return "UnknownParent";
    case ErrorCode::SatelliteViolation: return "SatelliteViolation";
    case ErrorCode::IncidenceConflict: return "IncidenceConflict";
    case ErrorCode::ExcessViolation: return "ExcessViolation";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::AlignedSupport: return "AlignedSupport";
    case ErrorCode::AlignedWithMaximal: return "AlignedWithMaximal";
    case ErrorCode::AdherencePairViolation: return "AdherencePairViolation";
    case ErrorCode::NotPreConsistent: return "NotPreConsistent";
    case ErrorCode::ShapeUnsupported: return "ShapeUnsupported";
    case ErrorCode::NonPositiveClass: return "NonPositiveClass";
    case ErrorCode::NotInE: return "NotInE";
    case ErrorCode::NotInVId: return "NotInVId";
    case ErrorCode::NotBoundaryClass: return "NotBoundaryClass";
    case ErrorCode::SupportNotContained: return "SupportNotContained";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::StepUnavailable: return "StepUnavailable";
    case ErrorCode::UndefinedPushforward: return "UndefinedPushforward";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::IterationCap: return "IterationCap";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "UnknownError";
}

}  // namespace cremona
