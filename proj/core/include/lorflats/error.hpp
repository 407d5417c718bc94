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

#ifndef LORFLATS_ERROR_HPP_
#define LORFLATS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lorflats {

enum class ErrorCode {
  // matroid-core
  EmptyBases,
  UnequalBasisSizes,
  ExchangeAxiomViolation,
  InvalidParams,
  HasLoops,
  LoopElement,
  DivisibilityFailure,
  InternalAxiomFailure,
  // poset-lattice
  NotGraded,
  HypothesisViolation,
  // cone-geometry
  TrivialInterval,
  NotInCone,
  FeasibilityFailure,
  BadNesting,
  ElementOutsideInterval,
  // multipoly
  UnknownVariable,
  MissingCoordinate,
  WrongDegree,
  DimensionMismatch,
  // basis-polynomial
  NotAnInterval,
  PrerequisiteNotBalanced,
  MismatchWithDirectComputation,
  // lorentzian-cert
  NotSymmetric,
  DirectionNotInCone,
  CertificationFailure,
  Inhomogeneous,
  Unsupported,
  NonpositiveValue,
  // chow-ring
  TopDegreeNotOneDimensional,
  FlagInconsistency,
  SizeLimitExceeded,
  // input parsing
  ParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported with this exception; `code()` names the
// failure kind and `what()` carries the witness in human-readable form.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lorflats

#endif  // LORFLATS_ERROR_HPP_
