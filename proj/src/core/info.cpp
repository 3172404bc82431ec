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

#include "effinfo/info.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "effinfo/errors.hpp"

namespace effinfo {

namespace {

void require_input_prior(const Channel& m, const Distribution& prior) {
    if (!(prior.alphabet() == m.input())) {
        throw ValidationError("prior is not over the channel's input alphabet");
    }
}

double total_mass(const Distribution& p) {
    return std::accumulate(p.probs().begin(), p.probs().end(), 0.0);
}

// p(y|do(x)) is the same for every x in the prior's support.
bool constant_likelihood(const Channel& m, const Distribution& prior, std::size_t y) {
    std::optional<double> seen;
    for (std::size_t x = 0; x < prior.size(); ++x) {
        if (prior[x] == 0.0) {
            continue;
        }
        const double p = m.probability(y, x);
        if (seen && *seen != p) {
            return false;
        }
        seen = p;
    }
    return true;
}

}  // namespace

Bits kl_divergence(const Distribution& p, const Distribution& q) {
    if (!(p.alphabet() == q.alphabet())) {
        throw ValidationError("KL divergence of distributions over different alphabets");
    }
    double total = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        const double px = p[x];
        if (px == 0.0) {
            continue;
        }
        const double qx = q[x];
        if (qx == 0.0) {
            const auto& symbol = p.alphabet().label(x);
            throw SupportError("D[p||q] undefined: p('" + symbol + "') > 0 but q('" +
                                   symbol + "') = 0",
                               symbol);
        }
        total += px * std::log2(px / qx);
    }
    // rounding can leave near-identical pairs a few ulps below zero
    return Bits{std::max(total, 0.0)};
}

Bits information_gain(const Distribution& prior, const Distribution& posterior) {
    return kl_divergence(posterior, prior);
}

Bits shannon_entropy(const Distribution& p) {
    double total = 0.0;
    for (double px : p.probs()) {
        if (px > 0.0) {
            total -= px * std::log2(px);
        }
    }
    return Bits{std::max(total, 0.0)};
}

Distribution output_distribution(const Channel& m, const Distribution& prior) {
    require_input_prior(m, prior);
    std::vector<double> out(m.output().size(), 0.0);
    for (std::size_t x = 0; x < m.input().size(); ++x) {
        const double px = prior[x];
        const auto row = m.row(x);
        for (std::size_t y = 0; y < out.size(); ++y) {
            out[y] += row[y] * px;
        }
    }
    return Distribution(m.output(), std::move(out));
}

Distribution actual_repertoire(const Channel& m, const Distribution& prior, std::size_t y) {
    require_input_prior(m, prior);
    if (y >= m.output().size()) {
        throw ValidationError("output index " + std::to_string(y) + " out of range");
    }
    std::vector<double> joint(m.input().size());
    double evidence = 0.0;
    for (std::size_t x = 0; x < joint.size(); ++x) {
        joint[x] = m.probability(y, x) * prior[x];
        evidence += joint[x];
    }
    if (evidence == 0.0) {
        throw UndefinedQuantityError("output '" + m.output().label(y) +
                                     "' has zero probability; its actual repertoire "
                                     "is undefined");
    }
    if (constant_likelihood(m, prior, y)) {
        // the update is the identity; dividing by a sum that rounds away
        // from the prior's mass would leave ulp-level noise
        return prior;
    }
    for (double& p : joint) {
        p /= evidence;
    }
    return Distribution(m.input(), std::move(joint));
}

Bits effective_information(const Channel& m, const Distribution& prior, std::size_t y) {
    return kl_divergence(actual_repertoire(m, prior, y), prior);
}

Bits effective_information(const Channel& m, std::size_t y) {
    return effective_information(m, Distribution::uniform(m.input()), y);
}

Bits expected_effective_information(const Channel& m, const Distribution& prior) {
    const Distribution out = output_distribution(m, prior);
    double total = 0.0;
    for (std::size_t y = 0; y < out.size(); ++y) {
        if (out[y] > 0.0) {
            total += out[y] * effective_information(m, prior, y).value;
        }
    }
    return Bits{total};
}

Bits mutual_information(const Channel& m, const Distribution& prior) {
    require_input_prior(m, prior);
    const std::size_t nx = m.input().size();
    const std::size_t ny = m.output().size();

    std::vector<double> py(ny, 0.0);
    for (std::size_t x = 0; x < nx; ++x) {
        for (std::size_t y = 0; y < ny; ++y) {
            py[y] += prior[x] * m.probability(y, x);
        }
    }
    // p(y) relative to the prior's rounded mass, so an output independent of
    // the input gives log2(1) = 0 exactly
    const double mass = total_mass(prior);
    for (double& v : py) {
        v /= mass;
    }

    double total = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
        for (std::size_t y = 0; y < ny; ++y) {
            const double joint = prior[x] * m.probability(y, x);
            if (joint == 0.0) {
                continue;
            }
            total += joint * std::log2(joint / (prior[x] * py[y]));
        }
    }
    return Bits{std::max(total, 0.0)};
}

Channel copy_channel(const Alphabet& a) {
    std::vector<std::vector<double>> identity(a.size(), std::vector<double>(a.size(), 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        identity[i][i] = 1.0;
    }
    return Channel(a, a.primed(), identity);
}

}  // namespace effinfo
