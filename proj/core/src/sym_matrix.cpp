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

#include "lorflats/sym_matrix.hpp"

#include "lorflats/error.hpp"

namespace lorflats {

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  SymMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::NotSymmetric, "row " + std::to_string(i) + " has the wrong length");
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw Error(ErrorCode::NotSymmetric,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs from its transpose");
      }
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

SymMatrix& SymMatrix::operator*=(const Rational& c) {
  for (auto& v : data_) v *= c;
  return *this;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, "matrix sizes differ");
  SymMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

std::vector<std::vector<Rational>> SymMatrix::rows() const {
  std::vector<std::vector<Rational>> out(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

std::string SymMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j > 0) out += ", ";
      out += lorflats::to_string((*this)(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace lorflats
