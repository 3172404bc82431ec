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

#include "effinfo/alphabet.hpp"

#include <algorithm>
#include <unordered_set>

#include "effinfo/errors.hpp"

namespace effinfo {

Alphabet::Alphabet(std::vector<std::string> labels) {
    if (labels.empty()) {
        throw ValidationError("alphabet must contain at least one symbol");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second) {
            throw ValidationError("duplicate symbol '" + label + "' in alphabet");
        }
    }
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

Alphabet::Alphabet(std::initializer_list<std::string> labels)
    : Alphabet(std::vector<std::string>(labels)) {}

Alphabet Alphabet::indexed(std::size_t n, std::string_view prefix) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::string(prefix) + std::to_string(i));
    }
    return Alphabet(std::move(labels));
}

const std::string& Alphabet::label(std::size_t i) const {
    if (i >= size()) {
        throw ValidationError("symbol index " + std::to_string(i) + " out of range");
    }
    return (*labels_)[i];
}

std::size_t Alphabet::index_of(std::string_view label) const {
    const auto& labels = *labels_;
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw ValidationError("unknown symbol '" + std::string(label) + "'");
    }
    return static_cast<std::size_t>(it - labels.begin());
}

bool Alphabet::contains(std::string_view label) const noexcept {
    const auto& labels = *labels_;
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

Alphabet Alphabet::primed() const {
    std::vector<std::string> labels = *labels_;
    for (auto& label : labels) {
        label += '\'';
    }
    return Alphabet(std::move(labels));
}

}  // namespace effinfo
