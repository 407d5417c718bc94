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

#ifndef LORFLATS_POSET_HPP_
#define LORFLATS_POSET_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lorflats/subset.hpp"

namespace lorflats {

// Outcome of a structural predicate. `witness` describes the first violation
// found and is empty when the predicate holds.
struct Check {
  bool ok = true;
  std::string witness;

  explicit operator bool() const { return ok; }
  static Check pass() { return {}; }
  static Check fail(std::string why) { return {false, std::move(why)}; }
};

// A sub-poset of the Boolean lattice on {0, ..., n-1}, ordered by inclusion,
// in which every closed interval is graded. Elements are stored in canonical
// subset order, so a < b implies index(a) < index(b).
class GradedSubposet {
 public:
  using Index = std::size_t;

  // Throws NotGraded (with the offending interval) or InvalidParams.
  static GradedSubposet from_sets(int ground_size, std::vector<Subset> elements);

  int ground_size() const { return ground_size_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Subset>& elements() const { return elements_; }
  Subset element(Index i) const { return elements_[i]; }

  std::optional<Index> index_of(Subset s) const;
  // Throws NotAnInterval when `s` is not an element.
  Index require(Subset s) const;

  bool leq(Index a, Index b) const { return rank_[a * size() + b] >= 0; }
  bool less(Index a, Index b) const { return a != b && leq(a, b); }
  bool comparable(Index a, Index b) const { return leq(a, b) || leq(b, a); }
  // a is covered by b.
  bool covers(Index a, Index b) const;

  // r(a, b), the length of any maximal chain of [a, b]; -1 unless a <= b.
  int rank(Index a, Index b) const { return rank_[a * size() + b]; }
  // d(a, b) = r(a, b) - 1.
  int d(Index a, Index b) const { return rank(a, b) - 1; }

  const std::vector<Index>& upper_covers(Index a) const { return up_[a]; }
  const std::vector<Index>& lower_covers(Index a) const { return down_[a]; }

  std::vector<Index> closed_interval(Index a, Index b) const;
  std::vector<Index> open_interval(Index a, Index b) const;

  std::optional<Index> bottom() const;
  std::optional<Index> top() const;
  std::optional<Index> meet(Index a, Index b) const;
  std::optional<Index> join(Index a, Index b) const;

  // The closed interval [a, b] as a poset in its own right.
  GradedSubposet interval(Index a, Index b) const;

  // Every maximal chain a = c_0 < c_1 < ... < c_r = b, endpoints included.
  std::vector<std::vector<Index>> maximal_chains(Index a, Index b) const;

 private:
  int ground_size_ = 0;
  std::vector<Subset> elements_;
  std::unordered_map<Subset, Index> index_;
  std::vector<int> rank_;
  std::vector<std::vector<Index>> up_;
  std::vector<std::vector<Index>> down_;
};

// mu(a, b) for every comparable pair; zero elsewhere.
class MobiusTable {
 public:
  MobiusTable() = default;
  MobiusTable(std::size_t n, std::vector<std::int64_t> values) : n_(n), values_(std::move(values)) {}

  std::int64_t operator()(GradedSubposet::Index a, GradedSubposet::Index b) const {
    return values_[a * n_ + b];
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> values_;
};

// Bottom-up recursion mu(a,a) = 1, mu(a,b) = -sum_{a <= c < b} mu(a,c).
MobiusTable mobius(const GradedSubposet& poset);

// Weisner's identity for x covered by a, a < y:
//   mu(x, y) = -sum mu(x, b) over x < b, b covered by y, a not <= b.
// Throws HypothesisViolation when x is not covered by a or a is not below y.
bool weisner_check(const GradedSubposet& poset, const MobiusTable& mu,
                   GradedSubposet::Index x, GradedSubposet::Index a, GradedSubposet::Index y);
bool weisner_check(const GradedSubposet& poset, GradedSubposet::Index x,
                   GradedSubposet::Index a, GradedSubposet::Index y);
// weisner_check on every triple x covered by a, a < y.
Check check_weisner_all(const GradedSubposet& poset, const MobiusTable& mu);

// (F1)-(F3) relative to [lower, upper]: upper is the top of the interval, the
// interval is closed under intersection, and for every F in it the sets
// A \ F over covers F < A <= upper partition upper \ F.
Check check_flat_axioms(const GradedSubposet& poset, GradedSubposet::Index lower,
                        GradedSubposet::Index upper);
// The whole poset is a lattice of flats on its ground set: (F1) with E itself.
Check check_lattice_of_flats(const GradedSubposet& poset);

Check check_semimodular(const GradedSubposet& poset);
Check check_balanced(const GradedSubposet& poset);
Check check_one_balanced(const GradedSubposet& poset);
Check check_interval_connected(const GradedSubposet& poset);
Check check_mobius_sign_alternation(const GradedSubposet& poset, const MobiusTable& mu);

inline bool is_balanced(const GradedSubposet& p) { return check_balanced(p).ok; }
inline bool is_one_balanced(const GradedSubposet& p) { return check_one_balanced(p).ok; }
inline bool is_interval_connected(const GradedSubposet& p) {
  return check_interval_connected(p).ok;
}
inline bool is_semimodular(const GradedSubposet& p) { return check_semimodular(p).ok; }

}  // namespace lorflats

#endif  // LORFLATS_POSET_HPP_
