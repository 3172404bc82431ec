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

#include <set>
#include <unordered_set>

#include "effinfo/errors.hpp"
#include "effinfo/learning.hpp"

namespace effinfo::learning {

PointSet::PointSet(std::vector<std::string> points) {
    if (points.empty()) {
        throw ValidationError("point set must contain at least one point");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& p : points) {
        if (!seen.insert(p).second) {
            throw ValidationError("duplicate point '" + p + "' in point set");
        }
    }
    points_ = std::make_shared<const std::vector<std::string>>(std::move(points));
}

PointSet PointSet::indexed(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("p" + std::to_string(i));
    }
    return PointSet(std::move(names));
}

std::size_t PointSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < points_->size(); ++i) {
        if ((*points_)[i] == name) {
            return i;
        }
    }
    throw ValidationError("unknown point '" + std::string(name) + "'");
}

Labeling::Labeling(PointSet points, std::vector<int> signs)
    : points_(std::move(points)), signs_(std::move(signs)) {
    if (signs_.size() != points_.size()) {
        throw ValidationError("labeling has " + std::to_string(signs_.size()) +
                              " signs for " + std::to_string(points_.size()) + " points");
    }
    for (int s : signs_) {
        if (s != 1 && s != -1) {
            throw ValidationError("labeling entries must be +1 or -1, got " +
                                  std::to_string(s));
        }
    }
}

Labeling Labeling::from_mask(PointSet points, std::uint64_t mask) {
    std::vector<int> signs(points.size());
    for (std::size_t i = 0; i < signs.size(); ++i) {
        signs[i] = ((mask >> i) & 1U) != 0 ? 1 : -1;
    }
    return Labeling(std::move(points), std::move(signs));
}

Labeling Labeling::negated() const {
    std::vector<int> flipped(signs_.size());
    for (std::size_t i = 0; i < flipped.size(); ++i) {
        flipped[i] = -signs_[i];
    }
    return Labeling(points_, std::move(flipped));
}

std::uint64_t Labeling::mask() const {
    if (signs_.size() > 64) {
        throw ValidationError("labeling too long to pack into a 64-bit mask");
    }
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < signs_.size(); ++i) {
        if (signs_[i] > 0) {
            m |= std::uint64_t{1} << i;
        }
    }
    return m;
}

FunctionClass::FunctionClass(PointSet points, std::vector<Labeling> functions)
    : points_(std::move(points)), functions_(std::move(functions)) {
    if (functions_.empty()) {
        throw ValidationError("function class must contain at least one function");
    }
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < functions_.size(); ++i) {
        if (!(functions_[i].points() == points_)) {
            throw ValidationError("function " + std::to_string(i) +
                                  " is over a different point set");
        }
        if (!seen.insert(functions_[i].signs()).second) {
            throw ValidationError("function " + std::to_string(i) +
                                  " duplicates an earlier function");
        }
    }
}

FunctionClass FunctionClass::negated() const {
    std::vector<Labeling> flipped;
    flipped.reserve(functions_.size());
    for (const auto& f : functions_) {
        flipped.push_back(f.negated());
    }
    return FunctionClass(points_, std::move(flipped));
}

Dataset::Dataset(PointSet points, std::vector<std::size_t> indices)
    : points_(std::move(points)), indices_(std::move(indices)) {
    if (indices_.empty()) {
        throw ValidationError("dataset must contain at least one point");
    }
    std::vector<bool> used(points_.size(), false);
    for (std::size_t idx : indices_) {
        if (idx >= points_.size()) {
            throw ValidationError("dataset index " + std::to_string(idx) + " out of range");
        }
        if (used[idx]) {
            throw ValidationError("dataset repeats point '" + points_.name(idx) + "'");
        }
        used[idx] = true;
    }
}

Rational Risk::value() const {
    return Rational(static_cast<std::int64_t>(mismatches), static_cast<std::int64_t>(length));
}

Rational RiskDistribution::weight(std::size_t k) const {
    const std::uint64_t c = k < counts.size() ? counts[k] : 0;
    return Rational(static_cast<std::int64_t>(c), static_cast<std::int64_t>(total()));
}

Rational FalsificationReport::weighted_risk() const {
    Rational sum(0);
    for (const auto& row : table) {
        sum += row.fraction * row.risk.value();
    }
    return sum;
}

}  // namespace effinfo::learning
