// Copyright 2026 The effectalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace effectalg {

enum class Errc {
  NotHermitian,
  NoConvergence,
  NegativeEigenvalue,
  DimMismatch,
  NotUnitVector,
  ModelMismatch,
  NotEffect,
  InvalidState,
  ScalarOutOfRange,
  CoefficientOutOfRange,
  NotOneDimensionalSharp,
  ResultNotEffect,
  DuplicateCoefficients,
  InconsistentDecomposition,
  ConditioningOnNull,
  MeasurementNotSharp,
  NotMeasurement,
  AllWeightsNull,
  ContextsNotDisjoint,
  LengthMismatch,
  InvalidSpec,
  InvalidSuiteName,
  IoError,
  ParseError,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
  case Errc::NotHermitian: return "NotHermitian";
  case Errc::NoConvergence: return "NoConvergence";
  case Errc::NegativeEigenvalue: return "NegativeEigenvalue";
  case Errc::DimMismatch: return "DimMismatch";
  case Errc::NotUnitVector: return "NotUnitVector";
  case Errc::ModelMismatch: return "ModelMismatch";
  case Errc::NotEffect: return "NotEffect";
  case Errc::InvalidState: return "InvalidState";
  case Errc::ScalarOutOfRange: return "ScalarOutOfRange";
  case Errc::CoefficientOutOfRange: return "CoefficientOutOfRange";
  case Errc::NotOneDimensionalSharp: return "NotOneDimensionalSharp";
  case Errc::ResultNotEffect: return "ResultNotEffect";
  case Errc::DuplicateCoefficients: return "DuplicateCoefficients";
  case Errc::InconsistentDecomposition: return "InconsistentDecomposition";
  case Errc::ConditioningOnNull: return "ConditioningOnNull";
  case Errc::MeasurementNotSharp: return "MeasurementNotSharp";
  case Errc::NotMeasurement: return "NotMeasurement";
  case Errc::AllWeightsNull: return "AllWeightsNull";
  case Errc::ContextsNotDisjoint: return "ContextsNotDisjoint";
  case Errc::LengthMismatch: return "LengthMismatch";
  case Errc::InvalidSpec: return "InvalidSpec";
  case Errc::InvalidSuiteName: return "InvalidSuiteName";
  case Errc::IoError: return "IoError";
  case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace effectalg
