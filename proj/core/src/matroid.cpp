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

#include "lorflats/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "lorflats/error.hpp"

namespace lorflats {

GroundSet::GroundSet(int size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  if (size < 1 || size > kMaxGroundSize) {
    throw Error(ErrorCode::InvalidParams,
                "ground set size " + std::to_string(size) + " outside 1.." +
                    std::to_string(kMaxGroundSize));
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != size) {
      throw Error(ErrorCode::InvalidParams, "expected " + std::to_string(size) + " labels");
    }
    std::set<std::string> distinct(labels_.begin(), labels_.end());
    if (distinct.size() != labels_.size()) {
      throw Error(ErrorCode::InvalidParams, "labels must be pairwise distinct");
    }
  }
}

std::string GroundSet::label(int e) const {
  if (labels_.empty()) return std::to_string(e + 1);
  return labels_[static_cast<std::size_t>(e)];
}

Matroid Matroid::from_bases(GroundSet ground, std::vector<Subset> bases) {
  if (bases.empty()) throw Error(ErrorCode::EmptyBases, "a matroid needs at least one basis");
  for (Subset b : bases) {
    if (!b.is_subset_of(ground.all())) {
      throw Error(ErrorCode::InvalidParams, "basis " + to_string(b) + " outside ground set");
    }
  }
  std::sort(bases.begin(), bases.end(),
            [](Subset a, Subset b) { return a.bits() < b.bits(); });
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  const int r = bases.front().size();
  for (Subset b : bases) {
    if (b.size() != r) {
      throw Error(ErrorCode::UnequalBasisSizes, to_string(bases.front()) + " and " + to_string(b) +
                                                    " have different sizes");
    }
  }

  std::unordered_set<Subset> lookup(bases.begin(), bases.end());
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      for (int x : (b1 - b2).elements()) {
        bool exchanged = false;
        for (int y : (b2 - b1).elements()) {
          if (lookup.count(b1.without(x).with(y)) != 0) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          throw Error(ErrorCode::ExchangeAxiomViolation,
                      "bases " + to_string(b1) + " and " + to_string(b2) +
                          " admit no exchange for element " + std::to_string(x));
        }
      }
    }
  }
  return Matroid(std::move(ground), std::move(bases), r);
}

int Matroid::rank_of(Subset s) const {
  int best = 0;
  for (Subset b : bases_) {
    best = std::max(best, (s & b).size());
    if (best == rank_) break;
  }
  return best;
}

Subset Matroid::closure(Subset s) const {
  const int r = rank_of(s);
  Subset out = s;
  for (int e = 0; e < ground_.size(); ++e) {
    if (!s.contains(e) && rank_of(s.with(e)) == r) out = out.with(e);
  }
  return out;
}

bool Matroid::has_loops() const {
  for (int e = 0; e < ground_.size(); ++e) {
    if (is_loop(e)) return true;
  }
  return false;
}

bool Matroid::is_basis(Subset s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s,
                            [](Subset a, Subset b) { return a.bits() < b.bits(); });
}

namespace {

// Calls fn on every k-subset of {0, ..., n-1}.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k == 0) {
    fn(Subset());
    return;
  }
  if (k > n) return;
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = n >= 64 ? 0 : (std::uint64_t{1} << n);
  while (true) {
    fn(Subset(s));
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
    if (limit != 0 && s >= limit) break;
  }
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Matroid uniform_matroid(int r, int n) {
  if (n < 1 || n > kMaxGroundSize || r < 0 || r > n) {
    throw Error(ErrorCode::InvalidParams,
                "uniform matroid needs 0 <= r <= n, got r=" + std::to_string(r) +
                    " n=" + std::to_string(n));
  }
  std::vector<Subset> bases;
  for_each_k_subset(n, r, [&](Subset s) { bases.push_back(s); });
  return Matroid::from_bases(GroundSet(n), std::move(bases));
}

Matroid graphic_matroid(const std::vector<std::pair<int, int>>& edges) {
  if (edges.empty()) throw Error(ErrorCode::InvalidParams, "graph needs at least one edge");
  if (edges.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw Error(ErrorCode::InvalidParams, "too many edges");
  }
  std::map<int, std::size_t> vertex;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0) throw Error(ErrorCode::InvalidParams, "vertex ids must be nonnegative");
    vertex.emplace(u, vertex.size());
    vertex.emplace(v, vertex.size());
  }
  UnionFind all(vertex.size());
  int r = 0;
  for (auto [u, v] : edges) r += all.unite(vertex[u], vertex[v]) ? 1 : 0;

  const int m = static_cast<int>(edges.size());
  std::vector<Subset> bases;
  for_each_k_subset(m, r, [&](Subset s) {
    UnionFind uf(vertex.size());
    for (int e : s.elements()) {
      if (!uf.unite(vertex[edges[static_cast<std::size_t>(e)].first],
                    vertex[edges[static_cast<std::size_t>(e)].second])) {
        return;
      }
    }
    bases.push_back(s);
  });
  return Matroid::from_bases(GroundSet(m), std::move(bases));
}

std::vector<Subset> fano_lines() {
  return {Subset::of({0, 1, 2}), Subset::of({0, 3, 4}), Subset::of({0, 5, 6}),
          Subset::of({1, 3, 5}), Subset::of({1, 4, 6}), Subset::of({2, 3, 6}),
          Subset::of({2, 4, 5})};
}

Matroid fano_matroid() {
  const auto lines = fano_lines();
  std::vector<Subset> bases;
  for_each_k_subset(7, 3, [&](Subset s) {
    if (std::find(lines.begin(), lines.end(), s) == lines.end()) bases.push_back(s);
  });
  return Matroid::from_bases(GroundSet(7), std::move(bases));
}

FlatLattice flats_lattice(const Matroid& m) {
  const Subset start = m.closure(Subset());
  std::unordered_set<Subset> seen{start};
  std::vector<Subset> pending{start};
  while (!pending.empty()) {
    const Subset f = pending.back();
    pending.pop_back();
    for (int e : (m.ground().all() - f).elements()) {
      const Subset g = m.closure(f.with(e));
      if (seen.insert(g).second) pending.push_back(g);
    }
  }
  GradedSubposet poset = [&] {
    try {
      return GradedSubposet::from_sets(m.ground().size(), {seen.begin(), seen.end()});
    } catch (const Error& err) {
      throw Error(ErrorCode::InternalAxiomFailure, err.what());
    }
  }();
  const auto bottom = poset.require(start);
  const auto top = poset.require(m.ground().all());
  if (auto c = check_flat_axioms(poset, bottom, top); !c) {
    throw Error(ErrorCode::InternalAxiomFailure, c.witness);
  }
  if (auto c = check_semimodular(poset); !c) {
    throw Error(ErrorCode::InternalAxiomFailure, c.witness);
  }
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (poset.rank(bottom, i) != m.rank_of(poset.element(i))) {
      throw Error(ErrorCode::InternalAxiomFailure,
                  "lattice rank disagrees with matroid rank at " + to_string(poset.element(i)));
    }
  }
  return FlatLattice(std::move(poset), bottom, top);
}

UniPoly characteristic_polynomial(const Matroid& m, const FlatLattice& lattice,
                                  const MobiusTable& mu) {
  if (m.has_loops()) throw Error(ErrorCode::HasLoops, "characteristic polynomial needs a loopless matroid");
  const auto& p = lattice.poset();
  std::vector<Rational> coeffs(static_cast<std::size_t>(m.rank()) + 1);
  for (std::size_t f = 0; f < p.size(); ++f) {
    coeffs[static_cast<std::size_t>(p.rank(f, lattice.top()))] += mu(lattice.bottom(), f);
  }
  return UniPoly(std::move(coeffs));
}

UniPoly characteristic_polynomial(const Matroid& m) {
  if (m.has_loops()) throw Error(ErrorCode::HasLoops, "characteristic polynomial needs a loopless matroid");
  const FlatLattice lattice = flats_lattice(m);
  return characteristic_polynomial(m, lattice, mobius(lattice.poset()));
}

UniPoly reduced_characteristic_polynomial(const Matroid& m, int i) {
  if (m.rank() < 1) {
    throw Error(ErrorCode::InvalidParams, "reduced characteristic polynomial needs rank >= 1");
  }
  if (i < 0 || i >= m.ground().size()) {
    throw Error(ErrorCode::InvalidParams, "element " + std::to_string(i) + " outside ground set");
  }
  if (m.is_loop(i)) throw Error(ErrorCode::LoopElement, "element " + std::to_string(i) + " is a loop");
  if (m.has_loops()) throw Error(ErrorCode::HasLoops, "reduced characteristic polynomial needs a loopless matroid");

  const FlatLattice lattice = flats_lattice(m);
  const auto& p = lattice.poset();
  const MobiusTable mu = mobius(p);
  const UniPoly chi = characteristic_polynomial(m, lattice, mu);

  auto reduced_for = [&](int element) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(m.rank()));
    for (std::size_t f = 0; f < p.size(); ++f) {
      if (p.element(f).contains(element)) continue;
      coeffs[static_cast<std::size_t>(p.d(f, lattice.top()))] += mu(lattice.bottom(), f);
    }
    return UniPoly(std::move(coeffs));
  };

  const UniPoly reduced = reduced_for(i);
  if (UniPoly::linear_factor(1) * reduced != chi) {
    throw Error(ErrorCode::DivisibilityFailure,
                "(t-1) * " + reduced.to_string() + " != " + chi.to_string());
  }
  for (int j = 0; j < m.ground().size(); ++j) {
    if (j != i && reduced_for(j) != reduced) {
      throw Error(ErrorCode::DivisibilityFailure, "reduced polynomial depends on the element: " +
                                                      std::to_string(i) + " vs " + std::to_string(j));
    }
  }
  return reduced;
}

}  // namespace lorflats
