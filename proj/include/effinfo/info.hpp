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

#ifndef EFFINFO_INFO_HPP
#define EFFINFO_INFO_HPP

#include <cstddef>

#include "effinfo/alphabet.hpp"
#include "effinfo/channel.hpp"
#include "effinfo/distribution.hpp"
#include "effinfo/numeric.hpp"

namespace effinfo {

/// D[p||q] = sum_x p(x) log2(p(x)/q(x)), with 0 log 0 = 0.
///
/// Throws ValidationError if the alphabets differ and SupportError if
/// some symbol has p(x) > 0 but q(x) = 0.
Bits kl_divergence(const Distribution& p, const Distribution& q);

/// Information gained about hypotheses when \p prior is updated to
/// \p posterior, D[posterior||prior].
Bits information_gain(const Distribution& prior, const Distribution& posterior);

/// H(p) = -sum_x p(x) log2 p(x).
Bits shannon_entropy(const Distribution& p);

/// p_m(y) = sum_x p_m(y|do(x)) prior(x).
Distribution output_distribution(const Channel& m, const Distribution& prior);

/// Bayes posterior over inputs given output \p y:
/// p(x|y) = p_m(y|do(x)) prior(x) / p_m(y).
///
/// Throws UndefinedQuantityError if p_m(y) = 0.
Distribution actual_repertoire(const Channel& m, const Distribution& prior,
                               std::size_t y);

/// ei(prior, m, y) = D[actual_repertoire(m, prior, y) || prior]. With the
/// uniform prior this is the effective information of output y.
Bits effective_information(const Channel& m, const Distribution& prior,
                           std::size_t y);

/// Effective information with the uniform (potential) repertoire as prior.
Bits effective_information(const Channel& m, std::size_t y);

/// sum over reachable y of p_m(y) ei(prior, m, y). Unreachable outputs
/// contribute nothing.
Bits expected_effective_information(const Channel& m, const Distribution& prior);

/// I(X;Y) by the direct double sum over the joint distribution. Kept
/// independent of the repertoire machinery.
Bits mutual_information(const Channel& m, const Distribution& prior);

/// Identity channel from \p a to its primed copy.
Channel copy_channel(const Alphabet& a);

}  // namespace effinfo

#endif  // EFFINFO_INFO_HPP
