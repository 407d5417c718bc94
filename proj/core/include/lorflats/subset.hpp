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

#ifndef LORFLATS_SUBSET_HPP_
#define LORFLATS_SUBSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lorflats {

// Ground sets are {0, ..., n-1} with n <= kMaxGroundSize.
inline constexpr int kMaxGroundSize = 64;

// A subset of the ground set, stored as a 64-bit mask.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset singleton(int e) { return Subset(std::uint64_t{1} << e); }
  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static Subset of(std::initializer_list<int> elements) {
    Subset s;
    for (int e : elements) s = s.with(e);
    return s;
  }
  static Subset of(std::span<const int> elements) {
    Subset s;
    for (int e : elements) s = s.with(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool is_proper_subset_of(Subset o) const {
    return is_subset_of(o) && bits_ != o.bits_;
  }
  constexpr bool comparable_with(Subset o) const {
    return is_subset_of(o) || o.is_subset_of(*this);
  }
  constexpr Subset with(int e) const { return Subset(bits_ | (std::uint64_t{1} << e)); }
  constexpr Subset without(int e) const { return Subset(bits_ & ~(std::uint64_t{1} << e)); }
  // Smallest element; undefined on the empty set.
  constexpr int min_element() const { return std::countr_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  // Set difference a \ b.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order: by cardinality, then lexicographically on sorted element
// lists. For equal cardinality the set owning the smallest element of the
// symmetric difference comes first.
constexpr bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const { return canonical_less(a, b); }
};

// "[0,2,5]" -- the form used for JSON keys and error messages.
inline std::string to_string(Subset s) {
  std::string out = "[";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += ']';
  return out;
}

// Iterates every subset of `mask` (including the empty set and mask itself) in
// increasing order of the underlying integer.
template <typename Fn>
void for_each_submask(Subset mask, Fn&& fn) {
  std::uint64_t m = mask.bits();
  std::uint64_t s = 0;
  while (true) {
    fn(Subset(s));
    if (s == m) break;
    s = (s - m) & m;
  }
}

}  // namespace lorflats

template <>
struct std::hash<lorflats::Subset> {
  std::size_t operator()(lorflats::Subset s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // LORFLATS_SUBSET_HPP_
