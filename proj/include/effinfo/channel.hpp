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

#ifndef EFFINFO_CHANNEL_HPP
#define EFFINFO_CHANNEL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "effinfo/alphabet.hpp"
#include "effinfo/numeric.hpp"

namespace effinfo {

/// A memoryless system as a row-stochastic Markov matrix p(y|x).
///
/// Intervening on the input, do(x), is reading row x: there is no other
/// causal structure to cut.
class Channel {
public:
    Channel(Alphabet input, Alphabet output,
            const std::vector<std::vector<double>>& matrix,
            double tolerance = kDefaultTolerance);

    const Alphabet& input() const noexcept { return input_; }
    const Alphabet& output() const noexcept { return output_; }

    /// p(y | do(x)).
    double probability(std::size_t y, std::size_t x) const;
    std::span<const double> row(std::size_t x) const;

    std::vector<std::vector<double>> matrix() const;

    friend bool operator==(const Channel&, const Channel&) = default;

private:
    Alphabet input_;
    Alphabet output_;
    std::vector<double> entries_;  // row-major, |input| x |output|
};

}  // namespace effinfo

#endif  // EFFINFO_CHANNEL_HPP
