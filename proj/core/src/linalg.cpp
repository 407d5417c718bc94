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

#include "lorflats/linalg.hpp"

#include <algorithm>

#include "lorflats/error.hpp"

namespace lorflats {

RowEchelon::RowEchelon(std::vector<Row> rows, std::size_t columns) : columns_(columns) {
  for (auto& row : rows) insert(std::move(row));
}

std::vector<std::size_t> RowEchelon::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < columns_; ++c) {
    if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end()) out.push_back(c);
  }
  return out;
}

Row RowEchelon::reduce(Row v) const {
  if (v.size() != columns_) throw Error(ErrorCode::DimensionMismatch, "row has the wrong length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational factor = v[pivots_[r]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < columns_; ++c) {
      if (rows_[r][c] != 0) v[c] -= factor * rows_[r][c];
    }
  }
  return v;
}

bool RowEchelon::insert(Row row) {
  row = reduce(std::move(row));
  auto lead = std::find_if(row.begin(), row.end(), [](const Rational& q) { return q != 0; });
  if (lead == row.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(lead - row.begin());
  const Rational inv = 1 / row[pivot];
  for (auto& q : row) q *= inv;
  for (auto& existing : rows_) {
    const Rational factor = existing[pivot];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < columns_; ++c) {
      if (row[c] != 0) existing[c] -= factor * row[c];
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto at = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + at, std::move(row));
  return true;
}

UniPoly characteristic_polynomial(const std::vector<Row>& a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  }
  if (n == 0) return UniPoly({Rational(1)});

  // Berkowitz: p_{k+1} = T_k p_k with T_k the Toeplitz matrix built from
  // 1, -a_kk, -R S, -R M S, ..., where M is the leading k x k block.
  std::vector<Rational> p = {1, -a[0][0]};  // leading coefficient first
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Rational> c(k + 2);
    c[0] = 1;
    c[1] = -a[k][k];
    std::vector<Rational> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = a[i][k];
    for (std::size_t j = 0; j < k; ++j) {
      Rational rs = 0;
      for (std::size_t i = 0; i < k; ++i) rs += a[k][i] * s[i];
      c[j + 2] = -rs;
      if (j + 1 < k) {
        std::vector<Rational> next(k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] != 0 && s[l] != 0) next[i] += a[i][l] * s[l];
          }
        }
        s = std::move(next);
      }
    }
    std::vector<Rational> q(k + 2);
    for (std::size_t i = 0; i < k + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, k); ++j) q[i] += c[i - j] * p[j];
    }
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return UniPoly(std::move(p));
}

UniPoly characteristic_polynomial(const SymMatrix& a) { return characteristic_polynomial(a.rows()); }

}  // namespace lorflats
