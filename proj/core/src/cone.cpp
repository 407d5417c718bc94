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

#include "lorflats/cone.hpp"

#include <algorithm>

#include "lorflats/error.hpp"

namespace lorflats {

IntervalCoords::IntervalCoords(Subset lower, Subset upper)
    : lower_(lower), upper_(upper), free_elements_((upper - lower).elements()) {
  const int k = static_cast<int>(free_elements_.size());
  slot_.assign(std::size_t{1} << k, 0);
  for_each_submask(upper - lower, [&](Subset part) {
    if (part.empty() || part == upper - lower) return;
    subsets_.push_back(lower | part);
  });
  std::sort(subsets_.begin(), subsets_.end(), CanonicalLess{});
  for (std::size_t i = 0; i < subsets_.size(); ++i) {
    slot_[compress(subsets_[i])] = static_cast<std::uint32_t>(i + 1);
  }
}

std::shared_ptr<const IntervalCoords> IntervalCoords::make(Subset lower, Subset upper) {
  if (!lower.is_proper_subset_of(upper)) {
    throw Error(ErrorCode::BadNesting,
                to_string(lower) + " is not a proper subset of " + to_string(upper));
  }
  if ((upper - lower).size() > kMaxIntervalWidth) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "interval width " + std::to_string((upper - lower).size()) + " exceeds " +
                    std::to_string(kMaxIntervalWidth));
  }
  return std::shared_ptr<const IntervalCoords>(new IntervalCoords(lower, upper));
}

std::uint32_t IntervalCoords::compress(Subset s) const {
  std::uint32_t out = 0;
  for (std::size_t b = 0; b < free_elements_.size(); ++b) {
    if (s.contains(free_elements_[b])) out |= std::uint32_t{1} << b;
  }
  return out;
}

std::optional<std::size_t> IntervalCoords::index_of(Subset s) const {
  if (!contains_closed(s)) return std::nullopt;
  const std::uint32_t slot = slot_[compress(s)];
  if (slot == 0) return std::nullopt;
  return slot - 1;
}

IntervalVector::IntervalVector(CoordsPtr coords)
    : coords_(std::move(coords)), values_(coords_->dimension()) {}

IntervalVector::IntervalVector(CoordsPtr coords, std::vector<Rational> values)
    : coords_(std::move(coords)), values_(std::move(values)) {
  if (values_.size() != coords_->dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(coords_->dimension()) +
                                                  " values, got " + std::to_string(values_.size()));
  }
}

Rational IntervalVector::at(Subset s) const {
  if (!coords_->contains_closed(s)) {
    throw Error(ErrorCode::MissingCoordinate, to_string(s) + " lies outside the interval");
  }
  if (auto idx = coords_->index_of(s)) return values_[*idx];
  return 0;
}

void IntervalVector::set(Subset s, Rational value) {
  auto idx = coords_->index_of(s);
  if (!idx) throw Error(ErrorCode::MissingCoordinate, to_string(s) + " is not a strict coordinate");
  values_[*idx] = std::move(value);
}

bool IntervalVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q == 0; });
}

bool IntervalVector::is_strictly_positive() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q > 0; });
}

void IntervalVector::require_same_coords(const IntervalVector& o) const {
  if (coords_->lower() != o.coords_->lower() || coords_->upper() != o.coords_->upper()) {
    throw Error(ErrorCode::DimensionMismatch, "vectors live on different intervals");
  }
}

IntervalVector& IntervalVector::operator+=(const IntervalVector& o) {
  require_same_coords(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

IntervalVector& IntervalVector::operator-=(const IntervalVector& o) {
  require_same_coords(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

IntervalVector& IntervalVector::operator*=(const Rational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

bool operator==(const IntervalVector& a, const IntervalVector& b) {
  return a.coords_->lower() == b.coords_->lower() && a.coords_->upper() == b.coords_->upper() &&
         a.values_ == b.values_;
}

Rational submodular_slack(const IntervalVector& y, Subset s, Subset t) {
  return y.at(s) + y.at(t) - y.at(s & t) - y.at(s | t);
}

bool is_modular(const IntervalVector& y) {
  bool ok = true;
  for_each_incomparable_pair(y.coords(), [&](Subset s, Subset t) {
    ok = submodular_slack(y, s, t) == 0;
    return ok;
  });
  return ok;
}

bool is_submodular(const IntervalVector& y) {
  bool ok = true;
  for_each_incomparable_pair(y.coords(), [&](Subset s, Subset t) {
    ok = submodular_slack(y, s, t) >= 0;
    return ok;
  });
  return ok;
}

bool is_strictly_submodular(const IntervalVector& y) {
  bool ok = true;
  for_each_incomparable_pair(y.coords(), [&](Subset s, Subset t) {
    ok = submodular_slack(y, s, t) > 0;
    return ok;
  });
  return ok;
}

IntervalVector modular_from_weights(const CoordsPtr& coords, std::span<const Rational> weights) {
  const auto free = coords->free_part().elements();
  if (weights.size() != free.size()) {
    throw Error(ErrorCode::InvalidParams, "expected one weight per element of L \\ K");
  }
  Rational total = 0;
  for (const auto& w : weights) total += w;
  if (total != 0) throw Error(ErrorCode::InvalidParams, "modular weights must sum to zero");
  IntervalVector y(coords);
  for (std::size_t i = 0; i < coords->dimension(); ++i) {
    const Subset s = coords->subset_at(i);
    for (std::size_t b = 0; b < free.size(); ++b) {
      if (s.contains(free[b])) y[i] += weights[b];
    }
  }
  return y;
}

std::vector<IntervalVector> modular_basis(const CoordsPtr& coords) {
  const int k = coords->width();
  if (k < 2) {
    throw Error(ErrorCode::TrivialInterval,
                "the modular subspace of a width-" + std::to_string(k) + " interval is zero");
  }
  std::vector<IntervalVector> basis;
  for (int j = 1; j < k; ++j) {
    std::vector<Rational> weights(static_cast<std::size_t>(k));
    weights[0] = 1;
    weights[static_cast<std::size_t>(j)] = -1;
    basis.push_back(modular_from_weights(coords, weights));
  }
  return basis;
}

IntervalVector interior_point(const CoordsPtr& coords) {
  IntervalVector v(coords);
  for (std::size_t i = 0; i < coords->dimension(); ++i) {
    const Subset s = coords->subset_at(i);
    v[i] = (s - coords->lower()).size() * (coords->upper() - s).size();
  }
  return v;
}

EffectiveDecomposition effective_decompose(const IntervalVector& y) {
  const CoordsPtr& coords = y.coords_ptr();
  if (y.is_strictly_positive()) return {IntervalVector(coords), Rational(0)};
  if (!is_strictly_submodular(y)) {
    throw Error(ErrorCode::NotInCone, "vector is not strictly submodular");
  }

  // Largest ratio slack_y / slack_v over incomparable pairs bounds epsilon;
  // every slack of v is at least 2.
  const IntervalVector v = interior_point(coords);
  std::optional<Rational> ratio;
  for_each_incomparable_pair(*coords, [&](Subset s, Subset t) {
    const Rational r = submodular_slack(y, s, t) / submodular_slack(v, s, t);
    if (!ratio || r < *ratio) ratio = r;
    return true;
  });
  Rational epsilon = 1;
  while (ratio && epsilon > *ratio) epsilon /= 2;

  // Greedy vertex of the base polyhedron of z: x_{e_j} = z(K + e_1..e_j) - z(K + e_1..e_{j-1}).
  const IntervalVector z = y - epsilon * v;
  const auto free = coords->free_part().elements();
  std::vector<Rational> weights(free.size());
  Subset prefix = coords->lower();
  Rational previous = 0;
  for (std::size_t b = 0; b < free.size(); ++b) {
    prefix = prefix.with(free[b]);
    const Rational current = z.at(prefix);
    weights[b] = -(current - previous);
    previous = current;
  }
  IntervalVector w = modular_from_weights(coords, weights);
  if (!(y + w).is_strictly_positive() || !is_modular(w)) {
    throw Error(ErrorCode::FeasibilityFailure, "greedy shift did not make the vector positive");
  }
  return {std::move(w), std::move(epsilon)};
}

Rational projection_coefficient(Subset f, Subset g, Subset source, Subset target) {
  const int width = (g - f).size();
  Rational c = source == target ? 1 : 0;
  if (source == g) c -= ratio((target - f).size(), width);
  if (source == f) c -= ratio((g - target).size(), width);
  return c;
}

IntervalVector project(const IntervalVector& t, const CoordsPtr& target) {
  const Subset k = t.coords().lower();
  const Subset l = t.coords().upper();
  const Subset f = target->lower();
  const Subset g = target->upper();
  if (!k.is_subset_of(f) || !f.is_proper_subset_of(g) || !g.is_subset_of(l)) {
    throw Error(ErrorCode::BadNesting, "need K <= F < G <= L, got F=" + to_string(f) +
                                           " G=" + to_string(g) + " on [" + to_string(k) + ", " +
                                           to_string(l) + "]");
  }
  const Rational tf = t.at(f);
  const Rational tg = t.at(g);
  const int width = (g - f).size();
  IntervalVector out(target);
  for (std::size_t i = 0; i < target->dimension(); ++i) {
    const Subset s = target->subset_at(i);
    out[i] = t.at(s) - tg * ratio((s - f).size(), width) - tf * ratio((g - s).size(), width);
  }
  return out;
}

IntervalVector project(const IntervalVector& t, Subset f, Subset g) {
  if (!f.is_proper_subset_of(g)) {
    throw Error(ErrorCode::BadNesting, to_string(f) + " is not a proper subset of " + to_string(g));
  }
  return project(t, IntervalCoords::make(f, g));
}

IntervalVector alpha(const CoordsPtr& coords) {
  IntervalVector out(coords);
  const int width = coords->width();
  for (std::size_t i = 0; i < coords->dimension(); ++i) {
    out[i] = ratio((coords->subset_at(i) - coords->lower()).size(), width);
  }
  return out;
}

IntervalVector beta(const CoordsPtr& coords) {
  IntervalVector out(coords);
  const int width = coords->width();
  for (std::size_t i = 0; i < coords->dimension(); ++i) {
    out[i] = ratio((coords->upper() - coords->subset_at(i)).size(), width);
  }
  return out;
}

namespace {

void require_free_element(const IntervalCoords& coords, int i) {
  if (i < 0 || i >= kMaxGroundSize || !coords.free_part().contains(i)) {
    throw Error(ErrorCode::ElementOutsideInterval,
                "element " + std::to_string(i) + " is not in L \\ K = " +
                    to_string(coords.free_part()));
  }
}

}  // namespace

IntervalVector alpha_i(const CoordsPtr& coords, int i) {
  require_free_element(*coords, i);
  IntervalVector out(coords);
  for (std::size_t s = 0; s < coords->dimension(); ++s) {
    out[s] = coords->subset_at(s).contains(i) ? 1 : 0;
  }
  return out;
}

IntervalVector beta_i(const CoordsPtr& coords, int i) {
  require_free_element(*coords, i);
  IntervalVector out(coords);
  for (std::size_t s = 0; s < coords->dimension(); ++s) {
    out[s] = coords->subset_at(s).contains(i) ? 0 : 1;
  }
  return out;
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

IntervalVector random_strictly_submodular(const CoordsPtr& coords, std::mt19937_64& rng) {
  // Slacks of the interior point are at least 2 per unit of scale; a
  // perturbation bounded by 3/8 per coordinate moves a slack by at most 3/2.
  constexpr std::int64_t kDenominator = 8;
  const IntervalVector v = interior_point(coords);
  const auto free = coords->free_part().elements();
  while (true) {
    const Rational scale = uniform_int(rng, 1, 3);
    IntervalVector y = scale * v;
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] += ratio(static_cast<long>(uniform_int(rng, -3, 3)), kDenominator);
    }
    if (free.size() >= 2) {
      std::vector<Rational> weights(free.size());
      Rational total = 0;
      for (std::size_t b = 0; b + 1 < free.size(); ++b) {
        weights[b] = uniform_int(rng, -4, 4);
        total += weights[b];
      }
      weights.back() = -total;
      y += modular_from_weights(coords, weights);
    }
    if (is_strictly_submodular(y)) return y;
  }
}

}  // namespace lorflats
