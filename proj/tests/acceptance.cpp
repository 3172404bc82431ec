// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "effinfo/cli/random_instance.hpp"
#include "effinfo/deterministic.hpp"
#include "effinfo/info.hpp"
#include "effinfo/learning.hpp"
#include "golden_runner.hpp"
#include "oracles.hpp"

using namespace effinfo;
using namespace effinfo::learning;

namespace {

constexpr std::uint64_t kSeed = 20260101;
constexpr std::size_t kLearningInstances = 500;
constexpr std::size_t kMinPoints = 3;
constexpr std::size_t kMaxPoints = 12;
constexpr std::size_t kShannonTrials = 200;
constexpr std::size_t kChannelTrials = 200;
constexpr double kInfoTolerance = 1e-9;

struct Verdict {
    bool ok = true;
    std::ostringstream note;

    void fail(const std::string& why) {
        if (ok) note << why;
        ok = false;
    }
};

std::vector<cli::LearningInstance> learning_family() {
    cli::InstanceGenerator gen(kSeed);
    std::vector<cli::LearningInstance> out;
    for (std::size_t i = 0; i < kLearningInstances; ++i) {
        out.push_back(gen.next(kMinPoints, kMaxPoints));
    }
    return out;
}

struct RandomChannel {
    std::vector<std::vector<double>> matrix;
    Channel channel;
    Distribution prior;
};

std::vector<RandomChannel> channel_family() {
    std::mt19937_64 rng(kSeed + 1);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    std::vector<RandomChannel> out;
    for (std::size_t t = 0; t < kChannelTrials; ++t) {
        const std::size_t nx = size(rng);
        const std::size_t ny = size(rng);
        auto matrix = oracle::random_matrix(rng, nx, ny, t % 3 == 0 ? 0.4 : 0.0);
        Channel m(Alphabet::indexed(nx), Alphabet::indexed(ny, "y"), matrix);
        auto prior = oracle::random_distribution(rng, m.input(), t % 5 == 0 ? 0.3 : 0.0);
        out.push_back({std::move(matrix), std::move(m), std::move(prior)});
    }
    return out;
}

void vc_identity(Verdict& v) {
    const auto family = learning_family();
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& [f, d] = family[i];
        const std::size_t n = f.points().size();
        const std::uint64_t restrictions = restriction_count(f, d);
        const auto dist = risk_distribution(f, d);
        const double ei = ei_of_learner(dist).value;
        const double v_bits = vc_entropy(f, d).value;
        if (dist.counts[0] != restrictions << (n - d.size())) {
            v.fail("instance " + std::to_string(i) + ": |L^-1(0)| != |q_D(F)| 2^(|X|-l)");
        }
        if (std::abs(ei - (static_cast<double>(d.size()) - v_bits)) > kIdentityTolerance) {
            v.fail("instance " + std::to_string(i) + ": ei != l - V");
        }
    }
    v.note << family.size() << " instances, 3<=|X|<=12";
}

void rademacher_identity(Verdict& v) {
    const auto family = learning_family();
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& [f, d] = family[i];
        const Rational e = expected_risk(f, d);
        const Rational r = rademacher(f, d);
        if (e != (Rational(1) - r) / 2) {
            v.fail("instance " + std::to_string(i) + ": E[eps] = " + to_string(e) +
                   ", (1-R)/2 = " + to_string((Rational(1) - r) / 2));
        }
    }
    v.note << family.size() << " instances, exact rationals";
}

void shannon(Verdict& v) {
    std::mt19937_64 rng(kSeed + 2);
    std::uniform_int_distribution<std::size_t> size(1, 16);
    double worst = 0.0;
    for (std::size_t t = 0; t < kShannonTrials; ++t) {
        const Alphabet a = Alphabet::indexed(size(rng));
        const auto p = oracle::random_distribution(rng, a, t % 4 == 0 ? 0.3 : 0.0);
        const double diff =
            std::abs(shannon_entropy(p).value - expected_effective_information(copy_channel(a), p).value);
        const double oracle_diff = std::abs(shannon_entropy(p).value -
                                            oracle::entropy({p.probs().begin(), p.probs().end()}));
        worst = std::max({worst, diff, oracle_diff});
    }
    if (!(worst < kInfoTolerance)) v.fail("max |H - E[ei(copy)]| too large; ");
    v.note << kShannonTrials << " priors, |X|<=16, max diff " << worst;
}

void mutual(Verdict& v) {
    double worst = 0.0;
    for (const auto& rc : channel_family()) {
        const double expected = expected_effective_information(rc.channel, rc.prior).value;
        const double reference =
            oracle::mutual_information(rc.matrix, {rc.prior.probs().begin(), rc.prior.probs().end()});
        const double library = mutual_information(rc.channel, rc.prior).value;
        worst = std::max({worst, std::abs(expected - reference), std::abs(expected - library)});
    }
    if (!(worst < kInfoTolerance)) v.fail("max |E[ei] - MI| too large; ");
    v.note << kChannelTrials << " channels <=8x8, max diff " << worst;
}

void deterministic(Verdict& v) {
    std::size_t maps = 0;
    for (std::size_t nx = 1; nx <= 4; ++nx) {
        for (std::size_t ny = 1; ny <= 3; ++ny) {
            std::vector<std::size_t> table(nx, 0);
            while (true) {
                const DeterministicMap f(Alphabet::indexed(nx), Alphabet::indexed(ny, "y"), table);
                const Channel m = channel_of_map(f);
                const auto u = Distribution::uniform(f.input());
                ++maps;
                for (std::size_t y = 0; y < ny; ++y) {
                    const Rational p = effective_probability(f, y);
                    if (p.numerator() == 0) continue;
                    const double closed = ei_deterministic(f, y).value;
                    if (std::abs(closed - effective_information(m, u, y).value) > kInfoTolerance) {
                        v.fail("closed form disagrees with the channel pipeline; ");
                    }
                    if (std::abs(closed + std::log2(to_double(p))) > kInfoTolerance) {
                        v.fail("ei != -log2 p_f(y); ");
                    }
                }
                std::size_t i = 0;
                while (i < nx && ++table[i] == ny) table[i++] = 0;
                if (i == nx) break;
            }
        }
    }
    v.note << maps << " maps, |X|<=4, |Y|<=3";
}

void bayes_and_kl(Verdict& v) {
    std::size_t checked = 0;
    std::mt19937_64 rng(kSeed + 3);
    for (const auto& rc : channel_family()) {
        const auto& m = rc.channel;
        const auto out = output_distribution(m, rc.prior);
        std::vector<double> mixed(m.input().size(), 0.0);
        for (std::size_t y = 0; y < out.size(); ++y) {
            if (out[y] == 0.0) continue;
            const auto rep = actual_repertoire(m, rc.prior, y);
            for (std::size_t x = 0; x < mixed.size(); ++x) mixed[x] += out[y] * rep[x];
            if (kl_divergence(rep, rc.prior).value < 0.0) v.fail("negative KL; ");
        }
        for (std::size_t x = 0; x < mixed.size(); ++x) {
            if (std::abs(mixed[x] - rc.prior[x]) > kInfoTolerance) v.fail("Bayes mixture != prior; ");
        }
        if (kl_divergence(rc.prior, rc.prior).value != 0.0) v.fail("D[p||p] != 0; ");
        const auto q = oracle::random_distribution(rng, m.input());
        double max_gap = 0.0;
        for (std::size_t x = 0; x < q.size(); ++x) max_gap = std::max(max_gap, std::abs(q[x] - rc.prior[x]));
        const double kl = kl_divergence(rc.prior, q).value;
        if (kl < 0.0 || (max_gap > 1e-3 && !(kl > 0.0))) v.fail("KL equality without equal distributions; ");
        ++checked;
    }
    // the learning family's repertoires over Sigma_X are deterministic; the
    // perfect-fit KL equals l - V there
    cli::InstanceGenerator gen(kSeed + 4);
    for (int i = 0; i < 50; ++i) {
        const auto inst = gen.next(1, 10);
        const auto& f = inst.functions;
        const auto& d = inst.dataset;
        const std::uint64_t all = std::uint64_t{1} << f.points().size();
        const auto dist = risk_distribution(f, d);
        std::vector<double> post(all, 0.0);
        for (std::uint64_t mk = 0; mk < all; ++mk) {
            if (erm(f, d, Labeling::from_mask(f.points(), mk)).mismatches == 0) {
                post[mk] = 1.0 / static_cast<double>(dist.counts[0]);
            }
        }
        const Alphabet h = Alphabet::indexed(all, "h");
        const double gain = information_gain(Distribution::uniform(h), Distribution(h, post)).value;
        if (std::abs(gain - information_gain_of_perfect_fit(f, d).value) > kInfoTolerance) {
            v.fail("perfect-fit information gain != l - V; ");
        }
        ++checked;
    }
    v.note << checked << " randomized instances";
}

void boundaries(Verdict& v) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const PointSet x = PointSet::indexed(n);
        std::vector<Labeling> all;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) all.push_back(Labeling::from_mask(x, m));
        const FunctionClass shatter(x, all);
        for (std::size_t l = 1; l <= n; ++l) {
            std::vector<std::size_t> idx(l);
            for (std::size_t k = 0; k < l; ++k) idx[k] = n - 1 - k;
            const Dataset d(x, idx);
            const auto c = check_identities(shatter, d);
            if (c.vc_entropy.value != static_cast<double>(l) || c.ei.value != 0.0 ||
                c.rademacher != Rational(1) || c.expected_risk != Rational(0)) {
                v.fail("shattering class boundary; ");
            }
            const FunctionClass single(x, {all[all.size() / 3]});
            if (vc_entropy(single, d).value != 0.0 ||
                ei_of_learner(single, d).value != static_cast<double>(l)) {
                v.fail("singleton class boundary; ");
            }
        }
        std::vector<std::vector<double>> rows(n, std::vector<double>{0.0, 1.0, 0.0});
        const Channel constant(Alphabet::indexed(n), Alphabet::indexed(3, "y"), rows);
        const auto u = Distribution::uniform(constant.input());
        if (effective_information(constant, u, 1).value != 0.0 ||
            mutual_information(constant, u).value != 0.0 ||
            expected_effective_information(constant, u).value != 0.0) {
            v.fail("constant channel boundary; ");
        }
    }
    v.note << "|X| = 1..8, all l";
}

void falsification(Verdict& v) {
    const auto family = learning_family();
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& [f, d] = family[i];
        const auto report = falsification_report(f, d);
        if (report.falsified_bits != ei_of_learner(f, d)) {
            v.fail("instance " + std::to_string(i) + ": falsified bits != ei; ");
        }
        if (report.weighted_risk() != expected_risk(f, d)) {
            v.fail("instance " + std::to_string(i) + ": weighted table != E[eps]; ");
        }
        Rational total(0);
        for (const auto& row : report.table) total += row.fraction;
        if (total != Rational(1)) v.fail("instance " + std::to_string(i) + ": fractions sum != 1; ");
    }
    v.note << family.size() << " instances";
}

void golden_files(Verdict& v) {
    const auto outcomes = golden::run_all(EFFINFO_GOLDEN_DIR);
    std::size_t passed = 0;
    for (const auto& o : outcomes) {
        if (o.passed) {
            ++passed;
        } else {
            v.fail(o.name + ": " + o.detail);
        }
    }
    v.note << passed << "/" << outcomes.size() << " golden cases";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
        {"1 VC-entropy identity: ei(L,0) = l - V(F,D)", vc_identity},
        {"2 Rademacher identity: E[eps|p_L] = (1 - R(F,D))/2", rademacher_identity},
        {"3 Shannon identity: H(X) = E[ei(copy)]", shannon},
        {"4 Mutual information: E[ei] = I(X;Y)", mutual},
        {"5 Deterministic closed form = channel pipeline", deterministic},
        {"6 Bayes consistency and KL nonnegativity", bayes_and_kl},
        {"7 Boundary cases", boundaries},
        {"8 Falsification report coherence", falsification},
        {"9 CLI golden files and exit codes", golden_files},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            check(v);
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        std::printf("[%s] %s (%s; %.2f s)\n", v.ok ? "PASS" : "FAIL", name.c_str(),
                    v.note.str().c_str(), took.count());
        failures += v.ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
