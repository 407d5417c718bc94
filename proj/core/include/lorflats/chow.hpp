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

#ifndef LORFLATS_CHOW_HPP_
#define LORFLATS_CHOW_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lorflats/basis_poly.hpp"
#include "lorflats/linalg.hpp"
#include "lorflats/multipoly.hpp"
#include "lorflats/poset.hpp"

namespace lorflats {

struct ChowLimits {
  std::size_t max_flats = 16;
  int max_degree = 4;
};

// The graded ring Q[x_F : K < F < L] / (I + J), one graded piece at a time.
// Monomials containing two incomparable variables lie in I and are dropped
// up front; each piece is the span of the remaining chain monomials modulo
// the degree-k part of J.
class ChowRing {
 public:
  // Throws SizeLimitExceeded, NotAnInterval, TopDegreeNotOneDimensional or
  // FlagInconsistency.
  static ChowRing build(const GradedSubposet& poset, Subset k, Subset l, ChowLimits limits = {});

  Subset lower() const { return lower_; }
  Subset upper() const { return upper_; }
  int top_degree() const { return d_; }
  const std::vector<Subset>& variables() const { return vars_; }
  std::vector<std::size_t> graded_dimensions() const;

  // Chain monomials of degree k, the basis the relations are written in.
  const std::vector<Monomial>& monomials(int k) const { return pieces_.at(k).monomials; }
  bool is_chain(const Monomial& m) const;
  // Coordinates of the class of m in the quotient basis of its degree.
  Row quotient_class(const Monomial& m) const;

  // Normalized so every flag monomial has degree 1. Throws WrongDegree.
  Rational degree(const Monomial& m) const;

  // (1/d!) deg((sum_F x_F t_F)^d) in the variables t_F.
  MultiPoly volume_polynomial() const;

 private:
  struct Piece {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t, MonomialOrder> position;
    RowEchelon relations{0};
  };

  Subset lower_;
  Subset upper_;
  int d_ = 0;
  std::vector<Subset> vars_;
  std::vector<std::vector<char>> comparable_;
  std::vector<Piece> pieces_;
  std::map<Monomial, Rational, MonomialOrder> top_degrees_;
};

struct ChowReport {
  Subset lower;
  Subset upper;
  std::vector<std::size_t> graded_dimensions;
  bool top_one_dimensional = false;
  bool flags_consistent = false;
  bool equal = false;
  std::string witness;
  bool ok() const { return top_one_dimensional && flags_consistent && equal; }
};

// vol == pol on (K, L). Throws SizeLimitExceeded.
ChowReport verify_vol_eq_pol(PolCache& cache, Subset k, Subset l, ChowLimits limits = {});

// deg(xi x_F eta) == deg(xi) deg(eta) for random monomials xi below F and
// eta above F.
Check tensor_degree_check(const GradedSubposet& poset, Subset k, Subset f, Subset l, int samples,
                          std::uint64_t seed, ChowLimits limits = {});

}  // namespace lorflats

#endif  // LORFLATS_CHOW_HPP_
