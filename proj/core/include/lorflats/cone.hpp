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

#ifndef LORFLATS_CONE_HPP_
#define LORFLATS_CONE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "lorflats/rational.hpp"
#include "lorflats/subset.hpp"

namespace lorflats {

// Intervals of the Boolean lattice wider than this are refused.
inline constexpr int kMaxIntervalWidth = 16;

// Coordinates y_S for the strict intermediate sets K < S < L of a Boolean
// interval, in canonical subset order. There are 2^|L \ K| - 2 of them; the
// endpoints carry the implicit values y_K = y_L = 0.
class IntervalCoords {
 public:
  // Throws BadNesting unless K is a proper subset of L, and SizeLimitExceeded
  // when |L \ K| > kMaxIntervalWidth.
  static std::shared_ptr<const IntervalCoords> make(Subset lower, Subset upper);

  Subset lower() const { return lower_; }
  Subset upper() const { return upper_; }
  Subset free_part() const { return upper_ - lower_; }
  int width() const { return free_part().size(); }
  std::size_t dimension() const { return subsets_.size(); }

  Subset subset_at(std::size_t i) const { return subsets_[i]; }
  const std::vector<Subset>& subsets() const { return subsets_; }
  // Index of a strict intermediate set, nullopt otherwise.
  std::optional<std::size_t> index_of(Subset s) const;
  bool contains_closed(Subset s) const {
    return lower_.is_subset_of(s) && s.is_subset_of(upper_);
  }

 private:
  IntervalCoords(Subset lower, Subset upper);
  std::uint32_t compress(Subset s) const;

  Subset lower_;
  Subset upper_;
  std::vector<int> free_elements_;
  std::vector<Subset> subsets_;
  std::vector<std::uint32_t> slot_;  // compressed mask -> index + 1 (0 = endpoint)
};

using CoordsPtr = std::shared_ptr<const IntervalCoords>;

// An exact rational point of E_K^L.
class IntervalVector {
 public:
  explicit IntervalVector(CoordsPtr coords);
  IntervalVector(CoordsPtr coords, std::vector<Rational> values);

  const IntervalCoords& coords() const { return *coords_; }
  const CoordsPtr& coords_ptr() const { return coords_; }
  std::size_t size() const { return values_.size(); }

  // y_S for K <= S <= L (zero at the endpoints). Throws MissingCoordinate
  // for sets outside the interval.
  Rational at(Subset s) const;
  // Throws MissingCoordinate unless K < S < L.
  void set(Subset s, Rational value);

  const Rational& operator[](std::size_t i) const { return values_[i]; }
  Rational& operator[](std::size_t i) { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }

  bool is_zero() const;
  bool is_strictly_positive() const;

  IntervalVector& operator+=(const IntervalVector& o);
  IntervalVector& operator-=(const IntervalVector& o);
  IntervalVector& operator*=(const Rational& c);
  friend IntervalVector operator+(IntervalVector a, const IntervalVector& b) { return a += b; }
  friend IntervalVector operator-(IntervalVector a, const IntervalVector& b) { return a -= b; }
  friend IntervalVector operator*(const Rational& c, IntervalVector a) { return a *= c; }
  friend bool operator==(const IntervalVector& a, const IntervalVector& b);

 private:
  void require_same_coords(const IntervalVector& o) const;

  CoordsPtr coords_;
  std::vector<Rational> values_;
};

// y_S + y_T - y_{S & T} - y_{S | T}
Rational submodular_slack(const IntervalVector& y, Subset s, Subset t);

// Calls fn(S, T) for each unordered pair of incomparable strict coordinates
// until fn returns false.
template <typename Fn>
void for_each_incomparable_pair(const IntervalCoords& coords, Fn&& fn) {
  const auto& subsets = coords.subsets();
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if (!subsets[i].comparable_with(subsets[j])) {
        if (!fn(subsets[i], subsets[j])) return;
      }
    }
  }
}

// Equality y_S + y_T = y_{S & T} + y_{S | T} on every pair.
bool is_modular(const IntervalVector& y);
// Weak (>=) and strict (>) submodularity on every incomparable pair.
bool is_submodular(const IntervalVector& y);
bool is_strictly_submodular(const IntervalVector& y);

// The modular vector y_S = sum of weights[e] over e in S \ K, with weights
// listed in increasing element order. Throws InvalidParams unless the
// weights sum to zero and there is one per element of L \ K.
IntervalVector modular_from_weights(const CoordsPtr& coords, std::span<const Rational> weights);

// Basis of M_K^L: for k >= 2, weight +1 on the first free element and -1 on
// the k-th. Throws TrivialInterval when |L \ K| < 2.
std::vector<IntervalVector> modular_basis(const CoordsPtr& coords);

// v_S = |S \ K| * |L \ S|, a strictly positive point of the open cone.
IntervalVector interior_point(const CoordsPtr& coords);

struct EffectiveDecomposition {
  IntervalVector shift;  // modular w with y + w > 0
  Rational epsilon;      // interior weight removed before the greedy step
};

// Finds modular w with y + w strictly positive. Strictly positive y returns
// w = 0 and epsilon = 0. Otherwise epsilon is the largest 1/2^k keeping
// y - epsilon*v submodular, and w is minus the greedy base of y - epsilon*v.
// Throws NotInCone, or FeasibilityFailure if the result fails its check.
EffectiveDecomposition effective_decompose(const IntervalVector& y);

// Coefficient of t_source in (pi_F^G t)_target for t in E_K^L.
Rational projection_coefficient(Subset f, Subset g, Subset source, Subset target);

// pi_F^G(t) on the coordinates of (F, G). Throws BadNesting unless
// K <= F < G <= L.
IntervalVector project(const IntervalVector& t, Subset f, Subset g);
IntervalVector project(const IntervalVector& t, const CoordsPtr& target);

// alpha_S = |S \ K| / |L \ K|, beta_S = |L \ S| / |L \ K|.
IntervalVector alpha(const CoordsPtr& coords);
IntervalVector beta(const CoordsPtr& coords);
// 0/1 vectors [i in S] and [i not in S]; throw ElementOutsideInterval unless
// i lies in L \ K.
IntervalVector alpha_i(const CoordsPtr& coords, int i);
IntervalVector beta_i(const CoordsPtr& coords, int i);

// A seeded strictly submodular point: a scaled interior point plus a small
// bounded-denominator perturbation plus a random modular shift.
IntervalVector random_strictly_submodular(const CoordsPtr& coords, std::mt19937_64& rng);

// Uniform integer in [lo, hi] that is reproducible across standard libraries.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace lorflats

#endif  // LORFLATS_CONE_HPP_
