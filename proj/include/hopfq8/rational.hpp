// Copyright 2026 The hopfq8 Authors
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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "hopfq8/errors.hpp"

namespace hopfq8 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Exact integer square root test.
inline bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  if (n < 2) return true;
  Integer r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

/// Square-free part of a nonzero integer, sign preserved.
///
/// Trial division runs to 10^6; any cofactor left over is below 10^18 and so
/// has at most two prime factors above the trial bound, which a perfect-square
/// test settles. Larger cofactors are rejected rather than guessed.
inline std::int64_t squarefree_part(const Integer& value) {
  if (value == 0) throw InputError("square-free part of zero");
  Integer n = value < 0 ? Integer(-value) : value;
  Integer result = 1;
  for (std::uint32_t p = 2; p <= 1000000; p += (p == 2 ? 1 : 2)) {
    Integer pp = Integer(p) * p;
    if (pp > n) break;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) result *= p;
  }
  if (n > 1) {
    if (n >= Integer("1000000000000000000")) {
      throw InputError("square-free part: cofactor too large to certify");
    }
    if (!is_perfect_square(n)) result *= n;
  }
  if (value < 0) result = -result;
  if (result > Integer(INT64_MAX) || result < Integer(INT64_MIN + 1)) {
    throw InputError("square-free part does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(result);
}

/// Square class of a nonzero rational: square-free part of num * den.
inline std::int64_t squarefree_part(const Rational& r) {
  if (r == 0) throw InputError("square class of zero");
  return squarefree_part(Integer(numerator_of(r) * denominator_of(r)));
}

inline bool is_rational_square(const Rational& r) {
  if (r < 0) return false;
  return is_perfect_square(numerator_of(r)) && is_perfect_square(denominator_of(r));
}

/// Distinct prime divisors by trial division (inputs are small by construction).
inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> primes;
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace hopfq8
