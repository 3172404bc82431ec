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

#include "effinfo/cli/random_instance.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace effinfo::cli {

std::uint64_t InstanceGenerator::uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo;
    if (span == std::numeric_limits<std::uint64_t>::max()) {
        return engine_();
    }
    const std::uint64_t range = span + 1;
    // reject the final partial block so every residue is equally likely
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw = engine_();
    while (draw >= limit) {
        draw = engine_();
    }
    return lo + draw % range;
}

LearningInstance InstanceGenerator::next(std::size_t min_points, std::size_t max_points) {
    const std::size_t n = uniform(min_points, max_points);
    const learning::PointSet points = learning::PointSet::indexed(n);

    // partial Fisher-Yates for l distinct points
    const std::size_t l = uniform(1, n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i < l; ++i) {
        std::swap(order[i], order[uniform(i, n - 1)]);
    }
    order.resize(l);

    const std::uint64_t all = std::uint64_t{1} << n;
    const std::size_t b = uniform(0, n);
    const std::uint64_t size = uniform(1, std::uint64_t{1} << b);

    // Sample the smaller of the chosen set and its complement by rejection.
    const bool sample_complement = size > all / 2;
    const std::uint64_t draws = sample_complement ? all - size : size;
    std::unordered_set<std::uint64_t> picked;
    std::vector<std::uint64_t> picked_order;
    while (picked.size() < draws) {
        const std::uint64_t mask = uniform(0, all - 1);
        if (picked.insert(mask).second) {
            picked_order.push_back(mask);
        }
    }

    std::vector<learning::Labeling> functions;
    if (sample_complement) {
        for (std::uint64_t mask = 0; mask < all; ++mask) {
            if (!picked.contains(mask)) {
                functions.push_back(learning::Labeling::from_mask(points, mask));
            }
        }
    } else {
        for (std::uint64_t mask : picked_order) {
            functions.push_back(learning::Labeling::from_mask(points, mask));
        }
    }

    return LearningInstance{learning::FunctionClass(points, std::move(functions)),
                            learning::Dataset(points, std::move(order))};
}

std::optional<learning::Labeling> InstanceGenerator::labeling_outside(
    const learning::FunctionClass& f) {
    const std::size_t n = f.points().size();
    const std::uint64_t all = std::uint64_t{1} << n;
    if (f.size() >= all) {
        return std::nullopt;
    }
    std::unordered_set<std::uint64_t> present;
    for (const auto& fn : f.functions()) {
        present.insert(fn.mask());
    }
    // pick the r-th missing labeling in mask order
    std::uint64_t r = uniform(0, all - f.size() - 1);
    for (std::uint64_t mask = 0; mask < all; ++mask) {
        if (present.contains(mask)) {
            continue;
        }
        if (r == 0) {
            return learning::Labeling::from_mask(f.points(), mask);
        }
        --r;
    }
    return std::nullopt;
}

}  // namespace effinfo::cli
