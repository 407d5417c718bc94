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

#ifndef LORFLATS_LINALG_HPP_
#define LORFLATS_LINALG_HPP_

#include <cstddef>
#include <vector>

#include "lorflats/rational.hpp"
#include "lorflats/sym_matrix.hpp"
#include "lorflats/unipoly.hpp"

namespace lorflats {

using Row = std::vector<Rational>;

// Reduced row echelon form over the rationals.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : columns_(columns) {}
  RowEchelon(std::vector<Row> rows, std::size_t columns);

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Columns without a pivot, in increasing order.
  std::vector<std::size_t> free_columns() const;

  // Adds a row to the span; returns false when it was already dependent.
  bool insert(Row row);
  // The unique representative of v modulo the row span that vanishes on
  // every pivot column.
  Row reduce(Row v) const;

 private:
  std::size_t columns_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

// det(x I - A), computed without division.
UniPoly characteristic_polynomial(const std::vector<Row>& square);
UniPoly characteristic_polynomial(const SymMatrix& a);

}  // namespace lorflats

#endif  // LORFLATS_LINALG_HPP_
