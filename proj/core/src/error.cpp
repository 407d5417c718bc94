// Copyright 2026 The lorflats Authors.
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

#include "lorflats/error.hpp"

namespace lorflats {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyBases: return "EmptyBases";
    case ErrorCode::UnequalBasisSizes: return "UnequalBasisSizes";
    case ErrorCode::ExchangeAxiomViolation: return "ExchangeAxiomViolation";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::HasLoops: return "HasLoops";
    case ErrorCode::LoopElement: return "LoopElement";
    case ErrorCode::DivisibilityFailure: return "DivisibilityFailure";
    case ErrorCode::InternalAxiomFailure: return "InternalAxiomFailure";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::TrivialInterval: return "TrivialInterval";
    case ErrorCode::NotInCone: return "NotInCone";
    case ErrorCode::FeasibilityFailure: return "FeasibilityFailure";
    case ErrorCode::BadNesting: return "BadNesting";
    case ErrorCode::ElementOutsideInterval: return "ElementOutsideInterval";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::MissingCoordinate: return "MissingCoordinate";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAnInterval: return "NotAnInterval";
    case ErrorCode::PrerequisiteNotBalanced: return "PrerequisiteNotBalanced";
    case ErrorCode::MismatchWithDirectComputation: return "MismatchWithDirectComputation";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DirectionNotInCone: return "DirectionNotInCone";
    case ErrorCode::CertificationFailure: return "CertificationFailure";
    case ErrorCode::Inhomogeneous: return "Inhomogeneous";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::NonpositiveValue: return "NonpositiveValue";
    case ErrorCode::TopDegreeNotOneDimensional: return "TopDegreeNotOneDimensional";
    case ErrorCode::FlagInconsistency: return "FlagInconsistency";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace lorflats
