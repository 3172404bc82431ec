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

#include "effinfo/distribution.hpp"

#include <cmath>
#include <numeric>

#include "effinfo/errors.hpp"

namespace effinfo {

Distribution::Distribution(Alphabet alphabet, std::vector<double> probs, double tolerance)
    : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {
    if (probs_.size() != alphabet_.size()) {
        throw ValidationError("distribution has " + std::to_string(probs_.size()) +
                              " entries for an alphabet of size " +
                              std::to_string(alphabet_.size()));
    }
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        if (!std::isfinite(probs_[i]) || probs_[i] < 0.0) {
            throw ValidationError("probability of '" + alphabet_.label(i) +
                                  "' is negative or not finite");
        }
    }
    const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
    if (std::abs(total - 1.0) > tolerance) {
        throw ValidationError("probabilities sum to " + std::to_string(total) +
                              ", not 1");
    }
}

Distribution Distribution::uniform(const Alphabet& alphabet) {
    const double p = 1.0 / static_cast<double>(alphabet.size());
    return Distribution(alphabet, std::vector<double>(alphabet.size(), p));
}

Distribution Distribution::point_mass(const Alphabet& alphabet, std::size_t symbol) {
    std::vector<double> probs(alphabet.size(), 0.0);
    probs.at(symbol) = 1.0;
    return Distribution(alphabet, std::move(probs));
}

}  // namespace effinfo
