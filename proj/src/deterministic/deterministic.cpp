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

#include "effinfo/deterministic.hpp"

#include <algorithm>

#include "effinfo/errors.hpp"

namespace effinfo {

namespace {

void require_output(const DeterministicMap& f, std::size_t y) {
    if (y >= f.output().size()) {
        throw ValidationError("output index " + std::to_string(y) + " out of range");
    }
}

std::vector<std::size_t> reachable_preimage(const DeterministicMap& f, std::size_t y) {
    auto pre = preimage(f, y);
    if (pre.empty()) {
        throw UndefinedQuantityError("output '" + f.output().label(y) +
                                     "' is not in the image of the map");
    }
    return pre;
}

}  // namespace

DeterministicMap::DeterministicMap(Alphabet input, Alphabet output,
                                   std::vector<std::size_t> table)
    : input_(std::move(input)), output_(std::move(output)), table_(std::move(table)) {
    if (table_.size() != input_.size()) {
        throw ValidationError("map table has " + std::to_string(table_.size()) +
                              " entries for " + std::to_string(input_.size()) + " inputs");
    }
    for (std::size_t x = 0; x < table_.size(); ++x) {
        if (table_[x] >= output_.size()) {
            throw ValidationError("input '" + input_.label(x) +
                                  "' maps outside the output alphabet");
        }
    }
}

std::vector<std::size_t> preimage(const DeterministicMap& f, std::size_t y) {
    require_output(f, y);
    std::vector<std::size_t> pre;
    for (std::size_t x = 0; x < f.input().size(); ++x) {
        if (f(x) == y) {
            pre.push_back(x);
        }
    }
    return pre;
}

Channel channel_of_map(const DeterministicMap& f) {
    std::vector<std::vector<double>> rows(f.input().size(),
                                          std::vector<double>(f.output().size(), 0.0));
    for (std::size_t x = 0; x < rows.size(); ++x) {
        rows[x][f(x)] = 1.0;
    }
    return Channel(f.input(), f.output(), rows);
}

Rational effective_probability(const DeterministicMap& f, std::size_t y) {
    require_output(f, y);
    const auto hits = std::count(f.table().begin(), f.table().end(), y);
    return Rational(static_cast<std::int64_t>(hits),
                    static_cast<std::int64_t>(f.input().size()));
}

Bits ei_deterministic(const DeterministicMap& f, std::size_t y) {
    const auto pre = reachable_preimage(f, y);
    return Bits{log2_count(f.input().size()) - log2_count(pre.size())};
}

Distribution actual_repertoire_det(const DeterministicMap& f, std::size_t y) {
    const auto pre = reachable_preimage(f, y);
    std::vector<double> probs(f.input().size(), 0.0);
    const double mass = 1.0 / static_cast<double>(pre.size());
    for (std::size_t x : pre) {
        probs[x] = mass;
    }
    return Distribution(f.input(), std::move(probs));
}

}  // namespace effinfo
