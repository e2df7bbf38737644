// Copyright 2026 The ebx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ebx {

enum class ErrorCode {
  NotHermitian,
  NotPSD,
  NotCP,
  NotUnital,
  NotUnitalTP,
  NotEB,
  NotExtreme,
  NotDominated,
  NotInvertible,
  DimensionMismatch,
  PreconditionDomination,
  VerificationFailed,
  StructureViolation,
  InternalInconsistency,
  NoCertificate,
  CoefficientsNotNormalized,
  DegenerateDraw,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotCP: return "NotCP";
    case ErrorCode::NotUnital: return "NotUnital";
    case ErrorCode::NotUnitalTP: return "NotUnitalTP";
    case ErrorCode::NotEB: return "NotEB";
    case ErrorCode::NotExtreme: return "NotExtreme";
    case ErrorCode::NotDominated: return "NotDominated";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PreconditionDomination: return "PreconditionDomination";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NoCertificate: return "NoCertificate";
    case ErrorCode::CoefficientsNotNormalized: return "CoefficientsNotNormalized";
    case ErrorCode::DegenerateDraw: return "DegenerateDraw";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ebx
