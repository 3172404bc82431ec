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

#include "effinfo/numeric.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace effinfo {

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double log2_count(std::uint64_t count) {
    if (count == 0) {
        throw std::domain_error("log2 of zero count");
    }
    if (std::has_single_bit(count)) {
        return static_cast<double>(std::countr_zero(count));
    }
    return std::log2(static_cast<double>(count));
}

}  // namespace effinfo
