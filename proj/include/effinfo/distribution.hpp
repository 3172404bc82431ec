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

#ifndef EFFINFO_DISTRIBUTION_HPP
#define EFFINFO_DISTRIBUTION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "effinfo/alphabet.hpp"
#include "effinfo/numeric.hpp"

namespace effinfo {

/// A probability vector over an alphabet. Validated on construction:
/// entries are nonnegative and sum to one within \p tolerance. Inputs
/// are never renormalized.
class Distribution {
public:
    Distribution(Alphabet alphabet, std::vector<double> probs,
                 double tolerance = kDefaultTolerance);

    static Distribution uniform(const Alphabet& alphabet);
    static Distribution point_mass(const Alphabet& alphabet, std::size_t symbol);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return probs_.size(); }
    std::span<const double> probs() const noexcept { return probs_; }
    double operator[](std::size_t symbol) const { return probs_.at(symbol); }

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    Alphabet alphabet_;
    std::vector<double> probs_;
};

}  // namespace effinfo

#endif  // EFFINFO_DISTRIBUTION_HPP
