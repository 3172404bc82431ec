/*
 * Copyright 2026 The effinfo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EFFINFO_NUMERIC_HPP
#define EFFINFO_NUMERIC_HPP

#include <compare>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace effinfo {

/// Absolute tolerance for normalization and stochasticity checks.
inline constexpr double kDefaultTolerance = 1e-9;

/// An information quantity in bits (all logarithms are base 2).
struct Bits {
    double value = 0.0;

    friend constexpr auto operator<=>(const Bits&, const Bits&) = default;
};

using Rational = boost::rational<std::int64_t>;

double to_double(const Rational& r);

/// "n/d", or "n" when the denominator is 1.
std::string to_string(const Rational& r);

/// log2 of a positive integer count; exact when the count is a power of two.
double log2_count(std::uint64_t count);

}  // namespace effinfo

#endif  // EFFINFO_NUMERIC_HPP
