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

#ifndef EFFINFO_ALPHABET_HPP
#define EFFINFO_ALPHABET_HPP

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace effinfo {

/// A finite, ordered set of distinct symbol names. Symbol i is labels()[i].
///
/// Copies share the label storage, so alphabets are cheap to pass around.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> labels);
    Alphabet(std::initializer_list<std::string> labels);

    /// Symbols named "0", "1", ..., "n-1" prefixed by \p prefix.
    static Alphabet indexed(std::size_t n, std::string_view prefix = "x");

    std::size_t size() const noexcept { return labels_->size(); }
    const std::vector<std::string>& labels() const noexcept { return *labels_; }
    const std::string& label(std::size_t i) const;

    /// Throws ValidationError naming the symbol if it is not in the alphabet.
    std::size_t index_of(std::string_view label) const;
    bool contains(std::string_view label) const noexcept;

    /// The isomorphic copy X' with every label suffixed by a prime.
    Alphabet primed() const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
        return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

}  // namespace effinfo

#endif  // EFFINFO_ALPHABET_HPP
