// Copyright 2026 The hodge-bounds Authors
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

#ifndef HODGE_BOUNDS_RATIONAL_HPP
#define HODGE_BOUNDS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hodge {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from raw numerator/denominator
// pairs must go through make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "a", "-a", "a/b".
Rational parse_rational(std::string_view text);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

bool is_integer(const Rational& r);

/// Binomial coefficient C(n, k) for n >= 0, 0 <= k.
Integer binomial(long n, long k);

}  // namespace hodge

#endif  // HODGE_BOUNDS_RATIONAL_HPP
