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

#ifndef LORFLATS_BASIS_POLY_HPP_
#define LORFLATS_BASIS_POLY_HPP_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lorflats/cone.hpp"
#include "lorflats/matroid.hpp"
#include "lorflats/multipoly.hpp"
#include "lorflats/poset.hpp"
#include "lorflats/unipoly.hpp"

namespace lorflats {

// Memoized basis polynomials of the intervals of one graded poset. The
// variables of pol(K, L) are the elements strictly between K and L, in the
// poset's canonical order. Not thread-safe while building.
class PolCache {
 public:
  using Index = GradedSubposet::Index;

  explicit PolCache(GradedSubposet poset) : poset_(std::move(poset)) {}

  const GradedSubposet& poset() const { return poset_; }

  // Throws NotAnInterval unless K < L.
  const MultiPoly& pol(Index k, Index l);
  const MultiPoly& pol(Subset k, Subset l) { return pol(poset_.require(k), poset_.require(l)); }

  std::vector<Subset> variables(Index k, Index l) const;

  // pol(F, G) composed with the projection onto (F, G), written in the
  // variables of (K, L). Requires K <= F < G <= L.
  MultiPoly lifted(Index k, Index l, Index f, Index g);

 private:
  MultiPoly build(Index k, Index l);

  GradedSubposet poset_;
  std::map<std::pair<Index, Index>, MultiPoly> memo_;
};

MultiPoly build_pol(const GradedSubposet& poset, Subset k, Subset l);

// d * f == sum_v t_v * d/dt_v f.
bool satisfies_euler_identity(const MultiPoly& f);

// d/dt_F pol(K, L) == pol(K, F)(proj) * pol(F, L)(proj) for every F in (K, L).
Check check_derivative_identity(PolCache& cache, Subset k, Subset l);

// pol(x + w) == pol(x) for random rational x and random modular w. Throws
// PrerequisiteNotBalanced unless [K, L] is balanced.
Check check_lineality_invariance(PolCache& cache, Subset k, Subset l, int trials,
                                 std::uint64_t seed);
// The same trials without the balancedness prerequisite.
Check check_lineality_sampled(PolCache& cache, Subset k, Subset l, int trials,
                              std::uint64_t seed);

// Second derivatives in two incomparable variables vanish.
Check check_incomparable_mixed_partials(PolCache& cache, Subset k, Subset l);

// For d(K, L) == 2: 2 pol = (sum_F t_F)^2 - sum_G (t_G - sum_{F<G} t_F)^2
// with F, G the elements of rank one and two above K.
Check check_rank_two_squares(PolCache& cache, Subset k, Subset l);

// Throws MissingCoordinate unless the point lives on (K, L).
Rational eval_at(PolCache& cache, Subset k, Subset l, const IntervalVector& point);

// d(K, L)! * pol(s alpha + t beta) in the variables (s, t), checked against
// sum over K <= F < L avoiding i of C(d, r(K,F)) |mu(K,F)| t^r(K,F) s^d(F,L).
// Throws ElementOutsideInterval or MismatchWithDirectComputation.
MultiPoly alpha_beta_bivariate(PolCache& cache, Subset k, Subset l, int i);
MultiPoly alpha_beta_expected(const GradedSubposet& poset, const MobiusTable& mu, Subset k,
                              Subset l, int i);
VariableNamer bivariate_namer();

// The reduced characteristic polynomial read off the (alpha, beta) expansion
// of pol over the whole lattice of flats, reconciled with the Mobius
// computation. Throws HasLoops, InvalidParams or MismatchWithDirectComputation.
UniPoly reduced_charpoly_via_pol(const Matroid& m);

}  // namespace lorflats

#endif  // LORFLATS_BASIS_POLY_HPP_
