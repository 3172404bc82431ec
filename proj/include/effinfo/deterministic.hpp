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

#ifndef EFFINFO_DETERMINISTIC_HPP
#define EFFINFO_DETERMINISTIC_HPP

#include <cstddef>
#include <vector>

#include "effinfo/alphabet.hpp"
#include "effinfo/channel.hpp"
#include "effinfo/distribution.hpp"
#include "effinfo/numeric.hpp"

namespace effinfo {

/// A total function f: X -> Y stored as a table, table()[x] = f(x).
class DeterministicMap {
public:
    DeterministicMap(Alphabet input, Alphabet output, std::vector<std::size_t> table);

    const Alphabet& input() const noexcept { return input_; }
    const Alphabet& output() const noexcept { return output_; }
    const std::vector<std::size_t>& table() const noexcept { return table_; }
    std::size_t operator()(std::size_t x) const { return table_.at(x); }

    friend bool operator==(const DeterministicMap&, const DeterministicMap&) = default;

private:
    Alphabet input_;
    Alphabet output_;
    std::vector<std::size_t> table_;
};

/// f^{-1}(y) in increasing input order; possibly empty.
std::vector<std::size_t> preimage(const DeterministicMap& f, std::size_t y);

/// The 0/1 Markov matrix with row x a point mass on f(x).
Channel channel_of_map(const DeterministicMap& f);

/// p_f(y) = |f^{-1}(y)| / |X|, exact. Zero for unreachable outputs.
Rational effective_probability(const DeterministicMap& f, std::size_t y);

/// ei(f, y) = log2|X| - log2|f^{-1}(y)|. Throws UndefinedQuantityError
/// for unreachable y.
Bits ei_deterministic(const DeterministicMap& f, std::size_t y);

/// Uniform on f^{-1}(y). Throws UndefinedQuantityError for unreachable y.
Distribution actual_repertoire_det(const DeterministicMap& f, std::size_t y);

}  // namespace effinfo

#endif  // EFFINFO_DETERMINISTIC_HPP
