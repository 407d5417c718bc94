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

#ifndef LORFLATS_RATIONAL_HPP_
#define LORFLATS_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lorflats {

// Arbitrary-precision exact rationals. Values are kept canonical (reduced,
// positive denominator) by every operation in this library.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

// Accepts "p", "p/q" and "-p/q". Throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// p/q in canonical form; q must be nonzero.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace lorflats

#endif  // LORFLATS_RATIONAL_HPP_
