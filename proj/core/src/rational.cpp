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

#include "lorflats/rational.hpp"

#include <cctype>

#include "lorflats/error.hpp"

namespace lorflats {

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&]() { return Error(ErrorCode::ParseError, "not a rational: '" + s + "'"); };
  if (s.empty()) throw fail();
  const std::size_t slash = s.find('/');
  auto valid_int = [](std::string_view part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  const std::string_view num = std::string_view(s).substr(0, slash);
  if (!valid_int(num)) throw fail();
  if (slash != std::string::npos) {
    const std::string_view den = std::string_view(s).substr(slash + 1);
    if (!valid_int(den) || den[0] == '-' || den[0] == '+') throw fail();
  }
  std::string cleaned = s[0] == '+' ? s.substr(1) : s;
  Rational q;
  if (q.set_str(cleaned, 10) != 0) throw fail();
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace lorflats
