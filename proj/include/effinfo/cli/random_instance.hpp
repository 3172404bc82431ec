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

#ifndef EFFINFO_CLI_RANDOM_INSTANCE_HPP
#define EFFINFO_CLI_RANDOM_INSTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "effinfo/cli/documents.hpp"

namespace effinfo::cli {

/// Seeded generator of learning instances. The sequence depends only on the
/// seed: draws use raw mt19937_64 output rather than the standard
/// distributions, whose algorithms vary between library implementations.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

    /// |X| uniform in [min_points, max_points], l uniform in [1, |X|] with
    /// distinct points in random order, and |F| uniform in [1, 2^b] for b
    /// uniform in [0, |X|].
    LearningInstance next(std::size_t min_points, std::size_t max_points);

    /// A labeling of \p points not in \p f, if one exists.
    std::optional<learning::Labeling> labeling_outside(const learning::FunctionClass& f);

private:
    std::mt19937_64 engine_;
};

}  // namespace effinfo::cli

#endif  // EFFINFO_CLI_RANDOM_INSTANCE_HPP
