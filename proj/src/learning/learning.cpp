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

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "effinfo/errors.hpp"
#include "effinfo/learning.hpp"

namespace effinfo::learning {

namespace {

void require_same_points(const PointSet& a, const PointSet& b, const char* what) {
    if (!(a == b)) {
        throw ValidationError(std::string(what) + " are over different point sets");
    }
}

void require_within_cap(std::size_t n, const EnumerationOptions& options, const char* what) {
    if (options.cap > kMaxCap) {
        throw ValidationError("enumeration cap " + std::to_string(options.cap) +
                              " exceeds the supported maximum " + std::to_string(kMaxCap));
    }
    if (n > options.cap) {
        throw CapExceededError(std::string(what) + " = " + std::to_string(n) +
                               " exceeds the enumeration cap of " +
                               std::to_string(options.cap) + " (2^" + std::to_string(n) +
                               " labelings)");
    }
}

// Bit k of the result is f(d_k) == +1.
std::uint64_t restrict_to(const Labeling& f, const Dataset& d) {
    std::uint64_t r = 0;
    const auto& idx = d.indices();
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (f[idx[k]] > 0) {
            r |= std::uint64_t{1} << k;
        }
    }
    return r;
}

// Sorted distinct restriction masks of F to D; needs l <= 64.
std::vector<std::uint64_t> restriction_masks(const FunctionClass& f, const Dataset& d) {
    std::vector<std::uint64_t> masks;
    masks.reserve(f.size());
    for (const auto& fn : f.functions()) {
        masks.push_back(restrict_to(fn, d));
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

// Hamming distance from every l-bit pattern to the nearest restriction,
// by breadth-first search on the l-cube seeded with all restrictions.
std::vector<std::uint8_t> distance_to_class(const std::vector<std::uint64_t>& restrictions,
                                            std::size_t l) {
    constexpr auto kUnvisited = std::numeric_limits<std::uint8_t>::max();
    std::vector<std::uint8_t> dist(std::size_t{1} << l, kUnvisited);
    std::vector<std::uint64_t> frontier;
    for (std::uint64_t r : restrictions) {
        dist[r] = 0;
        frontier.push_back(r);
    }
    std::vector<std::uint64_t> next;
    for (std::uint8_t level = 1; !frontier.empty(); ++level) {
        next.clear();
        for (std::uint64_t v : frontier) {
            for (std::size_t b = 0; b < l; ++b) {
                const std::uint64_t u = v ^ (std::uint64_t{1} << b);
                if (dist[u] == kUnvisited) {
                    dist[u] = level;
                    next.push_back(u);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

void check_instance(const FunctionClass& f, const Dataset& d) {
    require_same_points(f.points(), d.points(), "function class and dataset");
}

}  // namespace

Risk empirical_risk(const Labeling& f, const Labeling& target, const Dataset& d) {
    require_same_points(f.points(), target.points(), "function and target");
    require_same_points(f.points(), d.points(), "function and dataset");
    std::size_t mismatches = 0;
    for (std::size_t idx : d.indices()) {
        if (f[idx] != target[idx]) {
            ++mismatches;
        }
    }
    return Risk{mismatches, d.size()};
}

Risk erm(const FunctionClass& f, const Dataset& d, const Labeling& target) {
    check_instance(f, d);
    Risk best{d.size(), d.size()};
    for (const auto& fn : f.functions()) {
        const Risk r = empirical_risk(fn, target, d);
        if (r.mismatches < best.mismatches) {
            best = r;
        }
    }
    return best;
}

std::uint64_t restriction_count(const FunctionClass& f, const Dataset& d) {
    check_instance(f, d);
    if (d.size() <= 64) {
        return restriction_masks(f, d).size();
    }
    std::set<std::vector<int>> seen;
    for (const auto& fn : f.functions()) {
        std::vector<int> r;
        r.reserve(d.size());
        for (std::size_t idx : d.indices()) {
            r.push_back(fn[idx]);
        }
        seen.insert(std::move(r));
    }
    return seen.size();
}

Bits vc_entropy(const FunctionClass& f, const Dataset& d) {
    return Bits{log2_count(restriction_count(f, d))};
}

RiskDistribution risk_distribution(const FunctionClass& f, const Dataset& d,
                                   const EnumerationOptions& options) {
    check_instance(f, d);
    const std::size_t n = f.points().size();
    const std::size_t l = d.size();
    require_within_cap(n, options, "|X|");

    // L(sigma) depends on sigma only through its restriction to D, so the
    // per-labeling minimum over F is a table lookup.
    const auto dist = distance_to_class(restriction_masks(f, d), l);
    const auto& idx = d.indices();

    auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> local(l + 1, 0);
        for (std::uint64_t sigma = begin; sigma < end; ++sigma) {
            std::uint64_t r = 0;
            for (std::size_t k = 0; k < l; ++k) {
                r |= ((sigma >> idx[k]) & 1U) << k;
            }
            ++local[dist[r]];
        }
        return local;
    };

    const std::uint64_t total = std::uint64_t{1} << n;
    const unsigned workers =
        static_cast<unsigned>(std::clamp<std::uint64_t>(options.threads, 1, total));

    RiskDistribution out{l, n, std::vector<std::uint64_t>(l + 1, 0)};
    if (workers == 1) {
        out.counts = count_range(0, total);
        return out;
    }

    // Contiguous chunks reduced in chunk order.
    std::vector<std::vector<std::uint64_t>> partial(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = total * w / workers;
            const std::uint64_t end = total * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] { partial[w] = count_range(begin, end); });
        }
    }
    for (const auto& part : partial) {
        for (std::size_t k = 0; k <= l; ++k) {
            out.counts[k] += part[k];
        }
    }
    return out;
}

Bits ei_of_learner(const RiskDistribution& dist) {
    // F is nonempty, so some labeling is always fit perfectly.
    return Bits{static_cast<double>(dist.num_points) - log2_count(dist.counts.at(0))};
}

Bits ei_of_learner(const FunctionClass& f, const Dataset& d, const EnumerationOptions& options) {
    return ei_of_learner(risk_distribution(f, d, options));
}

Rational expected_risk(const RiskDistribution& dist) {
    std::int64_t weighted = 0;
    for (std::size_t k = 0; k < dist.counts.size(); ++k) {
        weighted += static_cast<std::int64_t>(k * dist.counts[k]);
    }
    return Rational(weighted, static_cast<std::int64_t>(dist.length * dist.total()));
}

Rational expected_risk(const FunctionClass& f, const Dataset& d,
                       const EnumerationOptions& options) {
    return expected_risk(risk_distribution(f, d, options));
}

Rational rademacher(const FunctionClass& f, const Dataset& d, const EnumerationOptions& options) {
    check_instance(f, d);
    const std::size_t l = d.size();
    require_within_cap(l, options, "l");

    const auto restrictions = restriction_masks(f, d);
    const std::uint64_t patterns = std::uint64_t{1} << l;
    const auto length = static_cast<std::int64_t>(l);

    // sum_k sigma_k f_k = l - 2 * hamming(sigma, f|D)
    std::int64_t sum = 0;
    for (std::uint64_t sigma = 0; sigma < patterns; ++sigma) {
        std::int64_t best = -length;
        for (std::uint64_t r : restrictions) {
            const auto corr = length - 2 * std::popcount(sigma ^ r);
            best = std::max(best, corr);
        }
        sum += best;
    }
    return Rational(sum, length * static_cast<std::int64_t>(patterns));
}

Rational rademacher_by_definition(const FunctionClass& f, const Dataset& d,
                                  const EnumerationOptions& options) {
    check_instance(f, d);
    const std::size_t n = f.points().size();
    require_within_cap(n, options, "|X|");

    std::vector<std::uint64_t> functions;
    functions.reserve(f.size());
    for (const auto& fn : f.functions()) {
        functions.push_back(fn.mask());
    }
    std::uint64_t data = 0;
    for (std::size_t idx : d.indices()) {
        data |= std::uint64_t{1} << idx;
    }

    // sum_k sigma(d_k) f(d_k) = l - 2 * |{k : sigma(d_k) != f(d_k)}|
    const std::uint64_t labelings = std::uint64_t{1} << n;
    const auto length = static_cast<std::int64_t>(d.size());
    std::int64_t sum = 0;
    for (std::uint64_t sigma = 0; sigma < labelings; ++sigma) {
        std::int64_t best = -length;
        for (std::uint64_t fn : functions) {
            best = std::max<std::int64_t>(best, length - 2 * std::popcount((sigma ^ fn) & data));
        }
        sum += best;
    }
    return Rational(sum, static_cast<std::int64_t>(d.size()) *
                             static_cast<std::int64_t>(labelings));
}

FalsificationReport falsification_report(const RiskDistribution& dist) {
    FalsificationReport report;
    report.total_hypotheses_bits = Bits{static_cast<double>(dist.num_points)};
    report.fitted_bits = Bits{log2_count(dist.counts.at(0))};
    report.falsified_bits =
        Bits{report.total_hypotheses_bits.value - report.fitted_bits.value};
    for (std::size_t k = 0; k < dist.counts.size(); ++k) {
        if (dist.counts[k] == 0) {
            continue;
        }
        report.table.push_back({Risk{k, dist.length}, dist.counts[k], dist.weight(k)});
    }
    return report;
}

FalsificationReport falsification_report(const FunctionClass& f, const Dataset& d,
                                         const EnumerationOptions& options) {
    return falsification_report(risk_distribution(f, d, options));
}

Bits information_gain_of_perfect_fit(const FunctionClass& f, const Dataset& d,
                                     const EnumerationOptions& options) {
    const Bits gain{static_cast<double>(d.size()) - vc_entropy(f, d).value};
    const Bits ei = ei_of_learner(f, d, options);
    if (std::abs(gain.value - ei.value) > kIdentityTolerance) {
        throw std::logic_error("l - V disagrees with ei(L, 0)");
    }
    return gain;
}

IdentityCheck check_identities(const FunctionClass& f, const Dataset& d,
                                    const EnumerationOptions& options) {
    IdentityCheck c;
    c.num_points = f.points().size();
    c.length = d.size();
    c.num_functions = f.size();
    c.restrictions = restriction_count(f, d);
    c.distribution = risk_distribution(f, d, options);
    c.vc_entropy = Bits{log2_count(c.restrictions)};
    c.ei = ei_of_learner(c.distribution);
    c.rademacher = rademacher(f, d, options);
    c.expected_risk = expected_risk(c.distribution);
    c.report = falsification_report(c.distribution);

    const std::uint64_t fitted = c.distribution.counts.at(0);
    const std::uint64_t predicted = c.restrictions << (c.num_points - c.length);
    const double l_minus_v = static_cast<double>(c.length) - c.vc_entropy.value;
    c.vc_identity =
        fitted == predicted && std::abs(c.ei.value - l_minus_v) <= kIdentityTolerance;

    c.rademacher_identity = c.expected_risk == (Rational(1) - c.rademacher) / 2;

    c.report_coherent = c.report.falsified_bits == c.ei &&
                        c.report.weighted_risk() == c.expected_risk;
    return c;
}

}  // namespace effinfo::learning
