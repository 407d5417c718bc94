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

#ifndef LORFLATS_MATROID_HPP_
#define LORFLATS_MATROID_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lorflats/poset.hpp"
#include "lorflats/subset.hpp"
#include "lorflats/unipoly.hpp"

namespace lorflats {

// The ground set {0, ..., n-1}, optionally with display labels.
class GroundSet {
 public:
  // Throws InvalidParams unless 1 <= n <= 64 and labels are distinct.
  explicit GroundSet(int size, std::vector<std::string> labels = {});

  int size() const { return size_; }
  Subset all() const { return Subset::full(size_); }
  bool has_labels() const { return !labels_.empty(); }
  // The given label, or the 1-based numeral "e+1" when unlabelled.
  std::string label(int e) const;

 private:
  int size_;
  std::vector<std::string> labels_;
};

class Matroid {
 public:
  // Validates bases: nonempty, equicardinal, and the exchange axiom checked on
  // every ordered pair. Throws EmptyBases, UnequalBasisSizes,
  // ExchangeAxiomViolation or InvalidParams.
  static Matroid from_bases(GroundSet ground, std::vector<Subset> bases);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& bases() const { return bases_; }
  int rank() const { return rank_; }

  // max |S & B| over bases B.
  int rank_of(Subset s) const;
  Subset closure(Subset s) const;
  bool is_loop(int e) const { return rank_of(Subset::singleton(e)) == 0; }
  bool has_loops() const;
  bool is_basis(Subset s) const;

 private:
  Matroid(GroundSet ground, std::vector<Subset> bases, int rank)
      : ground_(std::move(ground)), bases_(std::move(bases)), rank_(rank) {}

  GroundSet ground_;
  std::vector<Subset> bases_;  // sorted by raw bits for lookup
  int rank_;
};

Matroid uniform_matroid(int r, int n);
// Edges are pairs of vertex ids; edge k becomes ground element k. Self-loops
// are loops of the matroid.
Matroid graphic_matroid(const std::vector<std::pair<int, int>>& edges);
// The Fano plane on points 0..6.
Matroid fano_matroid();
// The seven lines of the Fano plane used by fano_matroid().
std::vector<Subset> fano_lines();

// The lattice of flats: a graded sub-poset of the Boolean lattice together
// with the rank data of its matroid.
class FlatLattice {
 public:
  using Index = GradedSubposet::Index;

  const GradedSubposet& poset() const { return poset_; }
  Index bottom() const { return bottom_; }
  Index top() const { return top_; }
  const std::vector<Subset>& flats() const { return poset_.elements(); }
  std::size_t size() const { return poset_.size(); }

 private:
  friend FlatLattice flats_lattice(const Matroid& m);
  FlatLattice(GradedSubposet poset, Index bottom, Index top)
      : poset_(std::move(poset)), bottom_(bottom), top_(top) {}

  GradedSubposet poset_;
  Index bottom_;
  Index top_;
};

// Enumerates flats by closing covers upward from cl(empty set), then verifies
// (F1)-(F3), gradedness and semimodularity (InternalAxiomFailure otherwise).
FlatLattice flats_lattice(const Matroid& m);

// chi(t) = sum over flats F of mu(empty, F) t^{r(F, E)}. Throws HasLoops.
UniPoly characteristic_polynomial(const Matroid& m);
UniPoly characteristic_polynomial(const Matroid& m, const FlatLattice& lattice,
                                  const MobiusTable& mu);

// sum over flats F not containing i of mu(empty, F) t^{d(F, E)}, checked
// against chi(t) / (t - 1) and against the same sum for every other element.
// Throws LoopElement, InvalidParams (rank 0), HasLoops or DivisibilityFailure.
UniPoly reduced_characteristic_polynomial(const Matroid& m, int i);

}  // namespace lorflats

#endif  // LORFLATS_MATROID_HPP_
