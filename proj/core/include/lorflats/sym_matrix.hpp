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

#ifndef LORFLATS_SYM_MATRIX_HPP_
#define LORFLATS_SYM_MATRIX_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "lorflats/rational.hpp"

namespace lorflats {

// Dense n x n symmetric matrix over the rationals. Writes go to both
// triangles, so symmetry is exact by construction.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), data_(n * n) {}

  // Throws NotSymmetric when rows are ragged or rows[i][j] != rows[j][i].
  static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static SymMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, const Rational& v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }

  SymMatrix& operator*=(const Rational& c);
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
  friend bool operator==(const SymMatrix& a, const SymMatrix& b) = default;

  std::vector<std::vector<Rational>> rows() const;
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

}  // namespace lorflats

#endif  // LORFLATS_SYM_MATRIX_HPP_
