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

#include "lorflats/poset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "lorflats/error.hpp"

namespace lorflats {

namespace {

using Index = GradedSubposet::Index;

std::string interval_name(const GradedSubposet& p, Index a, Index b) {
  return "[" + to_string(p.element(a)) + ", " + to_string(p.element(b)) + "]";
}

}  // namespace

GradedSubposet GradedSubposet::from_sets(int ground_size, std::vector<Subset> elements) {
  if (ground_size < 1 || ground_size > kMaxGroundSize) {
    throw Error(ErrorCode::InvalidParams,
                "ground set size must lie in 1.." + std::to_string(kMaxGroundSize));
  }
  const Subset ground = Subset::full(ground_size);
  for (Subset s : elements) {
    if (!s.is_subset_of(ground)) {
      throw Error(ErrorCode::InvalidParams, "element " + to_string(s) + " outside ground set");
    }
  }
  std::sort(elements.begin(), elements.end(), CanonicalLess{});
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw Error(ErrorCode::InvalidParams, "poset elements must be pairwise distinct");
  }

  GradedSubposet p;
  p.ground_size_ = ground_size;
  p.elements_ = std::move(elements);
  const std::size_t n = p.elements_.size();
  for (Index i = 0; i < n; ++i) p.index_.emplace(p.elements_[i], i);

  std::vector<char> le(n * n, 0);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a; b < n; ++b) le[a * n + b] = p.elements_[a].is_subset_of(p.elements_[b]);
  }

  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (Index b = 0; b < n; ++b) {
    for (Index a = 0; a < b; ++a) {
      if (!le[a * n + b]) continue;
      bool cover = true;
      for (Index c = a + 1; c < b && cover; ++c) {
        if (le[a * n + c] && le[c * n + b]) cover = false;
      }
      if (cover) {
        p.up_[a].push_back(b);
        p.down_[b].push_back(a);
      }
    }
  }

  // Shortest and longest maximal chains must agree on every interval.
  p.rank_.assign(n * n, -1);
  std::vector<int> longest(n);
  for (Index a = 0; a < n; ++a) {
    p.rank_[a * n + a] = 0;
    longest[a] = 0;
    for (Index b = a + 1; b < n; ++b) {
      if (!le[a * n + b]) continue;
      int lo = std::numeric_limits<int>::max();
      int hi = -1;
      for (Index c : p.down_[b]) {
        if (c < a || !le[a * n + c]) continue;
        lo = std::min(lo, p.rank_[a * n + c] + 1);
        hi = std::max(hi, longest[c] + 1);
      }
      if (lo != hi) {
        throw Error(ErrorCode::NotGraded, "interval " + interval_name(p, a, b) +
                                              " has maximal chains of lengths " +
                                              std::to_string(lo) + " and " + std::to_string(hi));
      }
      p.rank_[a * n + b] = lo;
      longest[b] = hi;
    }
  }
  return p;
}

std::optional<GradedSubposet::Index> GradedSubposet::index_of(Subset s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GradedSubposet::Index GradedSubposet::require(Subset s) const {
  auto idx = index_of(s);
  if (!idx) throw Error(ErrorCode::NotAnInterval, to_string(s) + " is not an element of the poset");
  return *idx;
}

bool GradedSubposet::covers(Index a, Index b) const {
  return std::find(up_[a].begin(), up_[a].end(), b) != up_[a].end();
}

std::vector<GradedSubposet::Index> GradedSubposet::closed_interval(Index a, Index b) const {
  std::vector<Index> out;
  if (!leq(a, b)) return out;
  for (Index c = a; c <= b; ++c) {
    if (leq(a, c) && leq(c, b)) out.push_back(c);
  }
  return out;
}

std::vector<GradedSubposet::Index> GradedSubposet::open_interval(Index a, Index b) const {
  std::vector<Index> out;
  if (!less(a, b)) return out;
  for (Index c = a + 1; c < b; ++c) {
    if (leq(a, c) && leq(c, b)) out.push_back(c);
  }
  return out;
}

std::optional<GradedSubposet::Index> GradedSubposet::bottom() const {
  for (Index a = 0; a < size(); ++a) {
    bool all = true;
    for (Index b = 0; b < size() && all; ++b) all = leq(a, b);
    if (all) return a;
  }
  return std::nullopt;
}

std::optional<GradedSubposet::Index> GradedSubposet::top() const {
  for (Index a = size(); a-- > 0;) {
    bool all = true;
    for (Index b = 0; b < size() && all; ++b) all = leq(b, a);
    if (all) return a;
  }
  return std::nullopt;
}

std::optional<GradedSubposet::Index> GradedSubposet::meet(Index a, Index b) const {
  std::vector<Index> lowers;
  for (Index c = 0; c < size(); ++c) {
    if (leq(c, a) && leq(c, b)) lowers.push_back(c);
  }
  for (Index c : lowers) {
    bool greatest = std::all_of(lowers.begin(), lowers.end(), [&](Index l) { return leq(l, c); });
    if (greatest) return c;
  }
  return std::nullopt;
}

std::optional<GradedSubposet::Index> GradedSubposet::join(Index a, Index b) const {
  std::vector<Index> uppers;
  for (Index c = 0; c < size(); ++c) {
    if (leq(a, c) && leq(b, c)) uppers.push_back(c);
  }
  for (Index c : uppers) {
    bool least = std::all_of(uppers.begin(), uppers.end(), [&](Index u) { return leq(c, u); });
    if (least) return c;
  }
  return std::nullopt;
}

GradedSubposet GradedSubposet::interval(Index a, Index b) const {
  std::vector<Subset> members;
  for (Index c : closed_interval(a, b)) members.push_back(elements_[c]);
  return from_sets(ground_size_, std::move(members));
}

std::vector<std::vector<GradedSubposet::Index>> GradedSubposet::maximal_chains(Index a,
                                                                               Index b) const {
  std::vector<std::vector<Index>> out;
  if (!leq(a, b)) return out;
  std::vector<Index> chain{a};
  auto extend = [&](auto&& self, Index cur) -> void {
    if (cur == b) {
      out.push_back(chain);
      return;
    }
    for (Index next : up_[cur]) {
      if (!leq(next, b)) continue;
      chain.push_back(next);
      self(self, next);
      chain.pop_back();
    }
  };
  extend(extend, a);
  return out;
}

MobiusTable mobius(const GradedSubposet& poset) {
  const std::size_t n = poset.size();
  std::vector<std::int64_t> mu(n * n, 0);
  for (Index a = 0; a < n; ++a) {
    mu[a * n + a] = 1;
    for (Index b = a + 1; b < n; ++b) {
      if (!poset.leq(a, b)) continue;
      std::int64_t sum = 0;
      for (Index c = a; c < b; ++c) {
        if (poset.leq(a, c) && poset.leq(c, b)) sum += mu[a * n + c];
      }
      mu[a * n + b] = -sum;
    }
  }
  return MobiusTable(n, std::move(mu));
}

bool weisner_check(const GradedSubposet& poset, const MobiusTable& mu, Index x, Index a,
                   Index y) {
  if (!poset.covers(x, a)) {
    throw Error(ErrorCode::HypothesisViolation,
                to_string(poset.element(x)) + " is not covered by " + to_string(poset.element(a)));
  }
  if (!poset.less(a, y)) {
    throw Error(ErrorCode::HypothesisViolation,
                to_string(poset.element(a)) + " is not strictly below " + to_string(poset.element(y)));
  }
  std::int64_t sum = 0;
  for (Index b : poset.lower_covers(y)) {
    if (poset.less(x, b) && !poset.leq(a, b)) sum += mu(x, b);
  }
  return mu(x, y) == -sum;
}

bool weisner_check(const GradedSubposet& poset, Index x, Index a, Index y) {
  return weisner_check(poset, mobius(poset), x, a, y);
}

Check check_weisner_all(const GradedSubposet& poset, const MobiusTable& mu) {
  for (Index x = 0; x < poset.size(); ++x) {
    for (Index a : poset.upper_covers(x)) {
      for (Index y = a + 1; y < poset.size(); ++y) {
        if (!poset.less(a, y)) continue;
        if (!weisner_check(poset, mu, x, a, y)) {
          return Check::fail("x = " + to_string(poset.element(x)) + ", a = " +
                             to_string(poset.element(a)) + ", y = " + to_string(poset.element(y)));
        }
      }
    }
  }
  return Check::pass();
}

Check check_flat_axioms(const GradedSubposet& poset, Index lower, Index upper) {
  if (!poset.leq(lower, upper)) {
    return Check::fail("not an interval: " + interval_name(poset, lower, upper));
  }
  const auto members = poset.closed_interval(lower, upper);
  const Subset top = poset.element(upper);
  // (F2)
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Subset meet = poset.element(members[i]) & poset.element(members[j]);
      if (!poset.index_of(meet)) {
        return Check::fail("(F2) " + to_string(poset.element(members[i])) + " & " +
                           to_string(poset.element(members[j])) + " = " + to_string(meet) +
                           " is missing");
      }
    }
  }
  // (F3)
  for (Index f : members) {
    const Subset base = poset.element(f);
    Subset covered;
    for (Index a : poset.upper_covers(f)) {
      if (!poset.leq(a, upper)) continue;
      const Subset part = poset.element(a) - base;
      if (!(covered & part).empty()) {
        return Check::fail("(F3) covers of " + to_string(base) + " overlap on " +
                           to_string(covered & part));
      }
      covered = covered | part;
    }
    if (covered != top - base) {
      return Check::fail("(F3) covers of " + to_string(base) + " miss " +
                         to_string((top - base) - covered));
    }
  }
  return Check::pass();
}

Check check_lattice_of_flats(const GradedSubposet& poset) {
  const Subset ground = Subset::full(poset.ground_size());
  auto top = poset.index_of(ground);
  if (!top) return Check::fail("(F1) ground set is not an element");
  auto bottom = poset.bottom();
  if (!bottom) return Check::fail("no bottom element");
  return check_flat_axioms(poset, *bottom, *top);
}

Check check_semimodular(const GradedSubposet& poset) {
  for (Index c = 0; c < poset.size(); ++c) {
    const auto& ups = poset.upper_covers(c);
    for (std::size_t i = 0; i < ups.size(); ++i) {
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        const Index a = ups[i];
        const Index b = ups[j];
        auto m = poset.meet(a, b);
        if (!m) {
          return Check::fail("no meet of " + to_string(poset.element(a)) + " and " +
                             to_string(poset.element(b)));
        }
        if (*m != c) continue;
        auto jn = poset.join(a, b);
        if (!jn) {
          return Check::fail("no join of " + to_string(poset.element(a)) + " and " +
                             to_string(poset.element(b)));
        }
        if (!poset.covers(a, *jn) || !poset.covers(b, *jn)) {
          return Check::fail("join " + to_string(poset.element(*jn)) + " does not cover " +
                             to_string(poset.element(a)) + " and " + to_string(poset.element(b)));
        }
      }
    }
  }
  return Check::pass();
}

Check check_balanced(const GradedSubposet& poset) {
  for (Index k = 0; k < poset.size(); ++k) {
    for (Index l = k + 1; l < poset.size(); ++l) {
      if (poset.d(k, l) != 1) continue;
      const Subset free = poset.element(l) - poset.element(k);
      const auto middle = poset.open_interval(k, l);
      std::optional<int> expected;
      for (int i : free.elements()) {
        const int count = static_cast<int>(std::count_if(middle.begin(), middle.end(), [&](Index f) {
          return poset.element(f).contains(i);
        }));
        if (!expected) {
          expected = count;
        } else if (*expected != count) {
          return Check::fail("interval " + interval_name(poset, k, l) + ": element " +
                             std::to_string(i) + " lies in " + std::to_string(count) +
                             " middle elements, expected " + std::to_string(*expected));
        }
      }
    }
  }
  return Check::pass();
}

Check check_one_balanced(const GradedSubposet& poset) {
  for (Index k = 0; k < poset.size(); ++k) {
    for (Index l = k + 1; l < poset.size(); ++l) {
      if (poset.d(k, l) != 1) continue;
      const Subset base = poset.element(k);
      Subset covered;
      for (Index a : poset.open_interval(k, l)) {
        const Subset part = poset.element(a) - base;
        if (!(covered & part).empty()) {
          return Check::fail("interval " + interval_name(poset, k, l) + ": parts overlap on " +
                             to_string(covered & part));
        }
        covered = covered | part;
      }
      if (covered != poset.element(l) - base) {
        return Check::fail("interval " + interval_name(poset, k, l) + ": parts miss " +
                           to_string((poset.element(l) - base) - covered));
      }
    }
  }
  return Check::pass();
}

Check check_interval_connected(const GradedSubposet& poset) {
  for (Index k = 0; k < poset.size(); ++k) {
    for (Index l = k + 1; l < poset.size(); ++l) {
      if (poset.d(k, l) < 2) continue;
      const auto middle = poset.open_interval(k, l);
      std::vector<char> seen(middle.size(), 0);
      std::queue<std::size_t> frontier;
      frontier.push(0);
      seen[0] = 1;
      std::size_t reached = 1;
      while (!frontier.empty()) {
        const std::size_t u = frontier.front();
        frontier.pop();
        for (std::size_t v = 0; v < middle.size(); ++v) {
          if (seen[v] || !poset.comparable(middle[u], middle[v])) continue;
          seen[v] = 1;
          ++reached;
          frontier.push(v);
        }
      }
      if (reached != middle.size()) {
        for (std::size_t v = 0; v < middle.size(); ++v) {
          if (!seen[v]) {
            return Check::fail("interval " + interval_name(poset, k, l) + ": " +
                               to_string(poset.element(middle[0])) + " and " +
                               to_string(poset.element(middle[v])) + " are not connected");
          }
        }
      }
    }
  }
  return Check::pass();
}

Check check_mobius_sign_alternation(const GradedSubposet& poset, const MobiusTable& mu) {
  for (Index a = 0; a < poset.size(); ++a) {
    for (Index b = a; b < poset.size(); ++b) {
      if (!poset.leq(a, b)) continue;
      const std::int64_t signed_mu = (poset.rank(a, b) % 2 == 0) ? mu(a, b) : -mu(a, b);
      if (signed_mu < 0) {
        return Check::fail("mu" + interval_name(poset, a, b) + " = " + std::to_string(mu(a, b)) +
                           " has the wrong sign");
      }
    }
  }
  return Check::pass();
}

}  // namespace lorflats
