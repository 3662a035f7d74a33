#pragma once

#include <stdexcept>
#include <string>

namespace ortho {

// Failure categories shared across the library. The CLI maps these onto
// exit codes, so the names are part of the user-facing vocabulary.
enum class ErrorCode {
  CoincidentPoints,
  ZeroDirection,
  CoincidentLines,
  InvalidLine,
  DegenerateTriangle,
  NotOrthologic,
  PencilDegenerate,
  NotBiorthologic,
  DegenerateCevian,
  NotHomological,
  PointNotOnCircle,
  TangentLine,
  OutsideOrOnCircle,
  VertexPoint,
  PointOnLine,
  GenerationFailed,
  ParseError,
  ConfigInvalid,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::InvalidLine: return "InvalidLine";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::NotOrthologic: return "NotOrthologic";
    case ErrorCode::PencilDegenerate: return "PencilDegenerate";
    case ErrorCode::NotBiorthologic: return "NotBiorthologic";
    case ErrorCode::DegenerateCevian: return "DegenerateCevian";
    case ErrorCode::NotHomological: return "NotHomological";
    case ErrorCode::PointNotOnCircle: return "PointNotOnCircle";
    case ErrorCode::TangentLine: return "TangentLine";
    case ErrorCode::OutsideOrOnCircle: return "OutsideOrOnCircle";
    case ErrorCode::VertexPoint: return "VertexPoint";
    case ErrorCode::PointOnLine: return "PointOnLine";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace ortho
