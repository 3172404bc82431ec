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

#include "effinfo/channel.hpp"

#include <cmath>
#include <numeric>

#include "effinfo/errors.hpp"

namespace effinfo {

Channel::Channel(Alphabet input, Alphabet output,
                 const std::vector<std::vector<double>>& matrix, double tolerance)
    : input_(std::move(input)), output_(std::move(output)) {
    if (matrix.size() != input_.size()) {
        throw ValidationError("channel matrix has " + std::to_string(matrix.size()) +
                              " rows for " + std::to_string(input_.size()) + " inputs");
    }
    entries_.reserve(input_.size() * output_.size());
    for (std::size_t x = 0; x < matrix.size(); ++x) {
        const auto& row = matrix[x];
        if (row.size() != output_.size()) {
            throw ValidationError("row '" + input_.label(x) + "' has " +
                                  std::to_string(row.size()) + " entries for " +
                                  std::to_string(output_.size()) + " outputs");
        }
        for (double p : row) {
            if (!std::isfinite(p) || p < 0.0) {
                throw ValidationError("row '" + input_.label(x) +
                                      "' has a negative or non-finite entry");
            }
        }
        const double total = std::accumulate(row.begin(), row.end(), 0.0);
        if (std::abs(total - 1.0) > tolerance) {
            throw ValidationError("row '" + input_.label(x) + "' sums to " +
                                  std::to_string(total) + ", not 1");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

double Channel::probability(std::size_t y, std::size_t x) const {
    if (y >= output_.size()) {
        throw ValidationError("output index " + std::to_string(y) + " out of range");
    }
    return row(x)[y];
}

std::span<const double> Channel::row(std::size_t x) const {
    if (x >= input_.size()) {
        throw ValidationError("input index " + std::to_string(x) + " out of range");
    }
    return std::span<const double>(entries_).subspan(x * output_.size(), output_.size());
}

std::vector<std::vector<double>> Channel::matrix() const {
    std::vector<std::vector<double>> rows;
    rows.reserve(input_.size());
    for (std::size_t x = 0; x < input_.size(); ++x) {
        const auto r = row(x);
        rows.emplace_back(r.begin(), r.end());
    }
    return rows;
}

}  // namespace effinfo
