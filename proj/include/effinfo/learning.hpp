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

#ifndef EFFINFO_LEARNING_HPP
#define EFFINFO_LEARNING_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "effinfo/numeric.hpp"

namespace effinfo::learning {

/// Largest enumeration cap accepted; labelings are packed into 64-bit words
/// and weights are exact over a 2^|X| denominator.
inline constexpr std::size_t kMaxCap = 30;
inline constexpr std::size_t kDefaultCap = 20;

struct EnumerationOptions {
    /// Operations enumerating 2^n labelings fail when n exceeds this.
    std::size_t cap = kDefaultCap;
    /// Worker threads for the hypothesis-space enumeration. Results do not
    /// depend on this value.
    unsigned threads = 1;
};

/// The finite set X of points. Copies share storage.
class PointSet {
public:
    explicit PointSet(std::vector<std::string> points);
    static PointSet indexed(std::size_t n);

    std::size_t size() const noexcept { return points_->size(); }
    const std::vector<std::string>& points() const noexcept { return *points_; }
    const std::string& name(std::size_t i) const { return points_->at(i); }
    std::size_t index_of(std::string_view name) const;

    friend bool operator==(const PointSet& a, const PointSet& b) noexcept {
        return a.points_ == b.points_ || *a.points_ == *b.points_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> points_;
};

/// A map sigma: X -> {+1, -1}.
class Labeling {
public:
    Labeling(PointSet points, std::vector<int> signs);

    /// Bit i of \p mask set means point i is labeled +1.
    static Labeling from_mask(PointSet points, std::uint64_t mask);

    const PointSet& points() const noexcept { return points_; }
    const std::vector<int>& signs() const noexcept { return signs_; }
    int operator[](std::size_t i) const { return signs_.at(i); }
    std::size_t size() const noexcept { return signs_.size(); }

    Labeling negated() const;
    /// Only valid for |X| <= 64.
    std::uint64_t mask() const;

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    PointSet points_;
    std::vector<int> signs_;
};

/// A nonempty set F of distinct labelings of one point set.
class FunctionClass {
public:
    FunctionClass(PointSet points, std::vector<Labeling> functions);

    const PointSet& points() const noexcept { return points_; }
    const std::vector<Labeling>& functions() const noexcept { return functions_; }
    std::size_t size() const noexcept { return functions_.size(); }

    /// {-f : f in F}.
    FunctionClass negated() const;

    friend bool operator==(const FunctionClass&, const FunctionClass&) = default;

private:
    PointSet points_;
    std::vector<Labeling> functions_;
};

/// Unlabeled data D = (d_1, ..., d_l): l >= 1 pairwise distinct points.
class Dataset {
public:
    Dataset(PointSet points, std::vector<std::size_t> indices);

    const PointSet& points() const noexcept { return points_; }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    PointSet points_;
    std::vector<std::size_t> indices_;
};

/// Empirical risk k/l, kept as the integer mismatch count.
struct Risk {
    std::size_t mismatches = 0;
    std::size_t length = 1;

    Rational value() const;
    friend bool operator==(const Risk&, const Risk&) = default;
};

/// p_L(eps): the hypotheses of Sigma_X grouped by the best-fit mismatch
/// count k. counts[k] = |L^{-1}(k/l)|; the counts sum to 2^|X|.
struct RiskDistribution {
    std::size_t length = 0;      // l
    std::size_t num_points = 0;  // |X|
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const noexcept { return std::uint64_t{1} << num_points; }
    Rational weight(std::size_t k) const;
};

struct FalsificationEntry {
    Risk risk;
    std::uint64_t hypotheses = 0;
    /// Fraction of Sigma_X whose best fit has this risk.
    Rational fraction;
};

struct FalsificationReport {
    Bits total_hypotheses_bits;  // log2|Sigma_X| = |X|
    Bits fitted_bits;            // log2|L^{-1}(0)|
    Bits falsified_bits;         // total - fitted = ei(L, 0)
    std::vector<FalsificationEntry> table;  // increasing risk, zero rows omitted

    /// sum over the table of fraction * eps.
    Rational weighted_risk() const;
};

/// (1/l) sum_k [f(d_k) != target(d_k)].
Risk empirical_risk(const Labeling& f, const Labeling& target, const Dataset& d);

/// The learning algorithm L_{F,D}: best empirical risk over F.
Risk erm(const FunctionClass& f, const Dataset& d, const Labeling& target);

/// |q_D(F)|: the number of distinct restrictions (f(d_1), ..., f(d_l)).
std::uint64_t restriction_count(const FunctionClass& f, const Dataset& d);

/// Empirical VC-entropy V(F, D) = log2|q_D(F)|.
Bits vc_entropy(const FunctionClass& f, const Dataset& d);

/// Runs L over all 2^|X| labelings of X.
RiskDistribution risk_distribution(const FunctionClass& f, const Dataset& d,
                                   const EnumerationOptions& options = {});

/// ei(L, 0) = |X| - log2|L^{-1}(0)|.
Bits ei_of_learner(const RiskDistribution& dist);
Bits ei_of_learner(const FunctionClass& f, const Dataset& d,
                   const EnumerationOptions& options = {});

/// E[eps | p_L] = sum_k (k/l) p_L(k/l).
Rational expected_risk(const RiskDistribution& dist);
Rational expected_risk(const FunctionClass& f, const Dataset& d,
                       const EnumerationOptions& options = {});

/// Empirical Rademacher complexity, averaged over the 2^l sign patterns on
/// the data points. The cap applies to l.
Rational rademacher(const FunctionClass& f, const Dataset& d,
                    const EnumerationOptions& options = {});

/// Rademacher complexity straight from the definition: the average over all
/// 2^|X| labelings sigma of X of sup_f (1/l) sum_k sigma(d_k) f(d_k).
/// Exponentially slower than rademacher(); the cap applies to |X|.
Rational rademacher_by_definition(const FunctionClass& f, const Dataset& d,
                                  const EnumerationOptions& options = {});

FalsificationReport falsification_report(const RiskDistribution& dist);
FalsificationReport falsification_report(const FunctionClass& f, const Dataset& d,
                                         const EnumerationOptions& options = {});

/// l - V(F, D), the information gained about Sigma_X on learning that L fit
/// the data perfectly. Cross-checked against ei(L, 0); a disagreement
/// throws std::logic_error.
Bits information_gain_of_perfect_fit(const FunctionClass& f, const Dataset& d,
                                     const EnumerationOptions& options = {});

/// Everything needed to check both learning identities on one instance.
struct IdentityCheck {
    std::size_t num_points = 0;
    std::size_t length = 0;
    std::size_t num_functions = 0;
    std::uint64_t restrictions = 0;  // |q_D(F)|
    RiskDistribution distribution;
    Bits vc_entropy;
    Bits ei;
    Rational rademacher;
    Rational expected_risk;
    FalsificationReport report;

    /// |L^{-1}(0)| = |q_D(F)| 2^{|X|-l} as integers, and
    /// |ei - (l - V)| <= 1e-12.
    bool vc_identity = false;
    /// E[eps] = (1 - R)/2 as rationals.
    bool rademacher_identity = false;
    /// Falsified bits equal ei and the weighted table equals E[eps].
    bool report_coherent = false;

    bool passed() const noexcept {
        return vc_identity && rademacher_identity && report_coherent;
    }
};

inline constexpr double kIdentityTolerance = 1e-12;

IdentityCheck check_identities(const FunctionClass& f, const Dataset& d,
                                    const EnumerationOptions& options = {});

}  // namespace effinfo::learning

#endif  // EFFINFO_LEARNING_HPP
