#include "mmr/diagnostics.hpp"

#include <iostream>
#include <mutex>

#include "mmr/error.hpp"

namespace mmr {
namespace {

std::mutex& handler_mutex() {
  static std::mutex m;
  return m;
}

DiagnosticHandler& handler() {
  static DiagnosticHandler h = [](std::string_view msg) {
    std::clog << "mmretinex: warning: " << msg << '\n';
  };
  return h;
}

}  // namespace

void set_diagnostic_handler(DiagnosticHandler h) {
  std::lock_guard lock(handler_mutex());
  handler() = std::move(h);
}

void emit_diagnostic(std::string_view message) {
  std::lock_guard lock(handler_mutex());
  if (handler()) handler()(message);
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonSquareOrIndivisible: return "NonSquareOrIndivisible";
    case ErrorCode::kIndivisibleDimensions: return "IndivisibleDimensions";
    case ErrorCode::kInvalidSigma: return "InvalidSigma";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kOddDimensions: return "OddDimensions";
    case ErrorCode::kUnknownFamily: return "UnknownFamily";
    case ErrorCode::kZeroEnergyPlane: return "ZeroEnergyPlane";
    case ErrorCode::kUnsupportedGeometry: return "UnsupportedGeometry";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace mmr
