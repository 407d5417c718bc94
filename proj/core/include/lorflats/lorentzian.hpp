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

#ifndef LORFLATS_LORENTZIAN_HPP_
#define LORFLATS_LORENTZIAN_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lorflats/basis_poly.hpp"
#include "lorflats/cone.hpp"
#include "lorflats/linalg.hpp"
#include "lorflats/multipoly.hpp"
#include "lorflats/sym_matrix.hpp"

namespace lorflats {

struct InertiaTriple {
  std::size_t n_plus = 0;
  std::size_t n_zero = 0;
  std::size_t n_minus = 0;
  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

std::string to_string(const InertiaTriple& t);

// Exact eigenvalue sign counts from det(x I - A) and Descartes' rule.
InertiaTriple inertia(const SymMatrix& a);
// Throws NotSymmetric.
InertiaTriple inertia(const std::vector<Row>& rows);

Check check_irreducible_nonneg_offdiag(const SymMatrix& a);
inline bool is_irreducible_nonneg_offdiag(const SymMatrix& a) {
  return check_irreducible_nonneg_offdiag(a).ok;
}

using DirectionTuple = std::vector<IntervalVector>;

// `count` tuples of `length` directions. The first repeats the interior
// point; the rest are random strictly submodular vectors.
std::vector<DirectionTuple> sample_direction_tuples(const CoordsPtr& coords, int length, int count,
                                                    std::uint64_t seed);

struct SampleResult {
  Rational contraction;                 // D_{v_1} ... D_{v_d} f
  std::optional<InertiaTriple> hessian;  // of D_{v_3} ... D_{v_d} f when d >= 2
  bool passed = false;
  std::string witness;
};

// Checks (P) and, for d >= 2, (H) on one tuple of length deg f.
SampleResult check_tuple(const MultiPoly& f, const DirectionTuple& tuple);

struct LorentzianCertificate {
  Subset lower;
  Subset upper;
  int degree = 0;
  std::uint64_t seed = 0;
  std::vector<DirectionTuple> samples;
  std::vector<SampleResult> results;
  bool verdict = false;
};

// Throws DirectionNotInCone when a direction is not a strictly submodular
// vector on (K, L). A failed sample yields verdict false; see
// require_certified. Samples are split over `jobs` threads and merged by
// index.
LorentzianCertificate certify_C_lorentzian(PolCache& cache, Subset k, Subset l,
                                           std::vector<DirectionTuple> samples,
                                           std::uint64_t seed = 0, int jobs = 1);
LorentzianCertificate certify_sampled(PolCache& cache, Subset k, Subset l, int count,
                                      std::uint64_t seed, int jobs = 1);
// Throws CertificationFailure naming the first failed sample.
void require_certified(const LorentzianCertificate& cert);

// Lorentzian in the usual sense: nonnegative coefficients, M-convex support
// and every (d-2)-th partial derivative a quadratic with at most one
// positive eigenvalue. Throws Inhomogeneous.
Check check_lorentzian_orthant(const MultiPoly& f);
inline bool is_lorentzian_orthant(const MultiPoly& f) { return check_lorentzian_orthant(f).ok; }
bool has_m_convex_support(const MultiPoly& f);

// f, g and f g all pass check_tuple on tuples cut cyclically from `points`.
Check product_check(const MultiPoly& f, const MultiPoly& g, std::span<const IntervalVector> points);

struct EquivalenceReport {
  InertiaTriple hessian;  // of g at x
  InertiaTriple form;     // of d g H - (d-1) grad grad^T at x
  bool one_positive = false;
  bool form_nsd = false;
  bool equivalent() const { return one_positive == form_nsd; }
};

// Throws NonpositiveValue unless g(x) > 0, Inhomogeneous unless g is
// homogeneous.
EquivalenceReport bh233_report(const MultiPoly& g, std::span<const Rational> x);
EquivalenceReport bh233_report(const MultiPoly& g, const IntervalVector& x);
inline bool bh233_equivalence_check(const MultiPoly& g, const IntervalVector& x) {
  return bh233_report(g, x).equivalent();
}

enum class HypothesisStatus { Pass, Fail, NotApplicable };
std::string_view to_string(HypothesisStatus s);

struct HypothesisResult {
  int number = 0;
  std::string name;
  HypothesisStatus status = HypothesisStatus::NotApplicable;
  std::string witness;
};

struct EngineReport {
  int degree = 0;
  std::vector<HypothesisResult> hypotheses;  // numbered 1..4
  bool ok() const;
};

EngineReport engine_hypotheses_report(PolCache& cache, Subset k, Subset l,
                                      const std::vector<DirectionTuple>& samples,
                                      int lineality_trials = 20, std::uint64_t seed = 0);

// a_k with f = sum_k C(d, k) a_k s^(d-k) t^k, f in generic variables (s, t).
std::vector<Rational> bivariate_normalized_coefficients(const MultiPoly& f);

}  // namespace lorflats

#endif  // LORFLATS_LORENTZIAN_HPP_
