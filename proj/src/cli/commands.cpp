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

#include "effinfo/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "effinfo/cli/documents.hpp"
#include "effinfo/cli/random_instance.hpp"
#include "effinfo/deterministic.hpp"
#include "effinfo/errors.hpp"
#include "effinfo/info.hpp"
#include "effinfo/learning.hpp"

namespace effinfo::cli {

namespace {

enum class Format { table, machine };

struct GlobalOptions {
    double tolerance = kDefaultTolerance;
    std::size_t cap = learning::kDefaultCap;
    unsigned threads = 1;
    Format format = Format::table;

    learning::EnumerationOptions enumeration() const { return {cap, threads}; }
};

std::string fixed6(double v) {
    if (std::abs(v) < 5e-7) {
        v = 0.0;  // no "-0.000000"
    }
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

std::string exact(const Rational& r) {
    return fixed6(to_double(r)) + " (" + to_string(r) + ")";
}

Json exact_json(const Rational& r) {
    return Json{{"value", to_double(r)}, {"exact", to_string(r)}};
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

struct Context {
    GlobalOptions globals;
    std::istream& in;
    std::ostream& out;
};

struct LoadedSystem {
    System system;
    Distribution prior;
    bool uniform_prior;
};

LoadedSystem load_system(const Context& ctx, const std::string& system_file,
                         const std::string& prior_file) {
    System system = parse_system(read_document(system_file, ctx.in), ctx.globals.tolerance);
    if (prior_file.empty()) {
        Distribution prior = Distribution::uniform(system.channel.input());
        return {std::move(system), std::move(prior), true};
    }
    Distribution prior = parse_prior(read_document(prior_file, ctx.in),
                                     system.channel.input(), ctx.globals.tolerance);
    return {std::move(system), std::move(prior), false};
}

void print_distribution(std::ostream& out, const Distribution& p) {
    std::size_t width = 0;
    for (const auto& label : p.alphabet().labels()) {
        width = std::max(width, label.size());
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        out << "  " << std::left << std::setw(static_cast<int>(width)) << p.alphabet().label(i)
            << std::right << "  " << fixed6(p[i]) << '\n';
    }
}

std::string describe(const System& s) {
    std::ostringstream os;
    os << (s.map ? "map" : "channel") << ", " << s.channel.input().size() << " inputs, "
       << s.channel.output().size() << " outputs";
    return os.str();
}

int cmd_ei(const Context& ctx, const std::string& system_file, const std::string& symbol,
           const std::string& prior_file) {
    const auto loaded = load_system(ctx, system_file, prior_file);
    const Channel& m = loaded.system.channel;
    const std::size_t y = m.output().index_of(symbol);

    const Distribution out_dist = output_distribution(m, loaded.prior);
    const Distribution repertoire = actual_repertoire(m, loaded.prior, y);
    const Bits ei = kl_divergence(repertoire, loaded.prior);
    const bool closed_form = loaded.system.map.has_value() && loaded.uniform_prior;

    if (ctx.globals.format == Format::machine) {
        Json doc{{"command", "ei"},
                 {"output", symbol},
                 {"ei", ei.value},
                 {"p_output", out_dist[y]},
                 {"actual_repertoire", to_document(repertoire)},
                 {"output_distribution", to_document(out_dist)},
                 {"prior", to_document(loaded.prior)}};
        if (loaded.system.map) {
            const auto& f = *loaded.system.map;
            doc["map"] = to_document(f);
            if (closed_form) {
                Json pre = Json::array();
                for (std::size_t x : preimage(f, y)) {
                    pre.push_back(f.input().label(x));
                }
                doc["preimage"] = std::move(pre);
                doc["effective_probability"] = exact_json(effective_probability(f, y));
                doc["ei_closed_form"] = ei_deterministic(f, y).value;
            }
        } else {
            doc["channel"] = to_document(m);
        }
        ctx.out << doc.dump(2) << '\n';
        return kSuccess;
    }

    auto& out = ctx.out;
    out << "system: " << describe(loaded.system) << '\n';
    out << "prior: " << (loaded.uniform_prior ? "uniform" : prior_file) << '\n';
    out << "output: " << symbol << '\n';
    out << "p(y) = " << fixed6(out_dist[y]) << '\n';
    out << "ei = " << fixed6(ei.value) << " bits\n";
    if (closed_form) {
        const auto& f = *loaded.system.map;
        out << "preimage: {";
        const auto pre = preimage(f, y);
        for (std::size_t i = 0; i < pre.size(); ++i) {
            out << (i ? ", " : "") << f.input().label(pre[i]);
        }
        out << "}\n";
        out << "effective probability = " << exact(effective_probability(f, y)) << '\n';
        out << "ei closed form = " << fixed6(ei_deterministic(f, y).value) << " bits\n";
    }
    out << "actual repertoire:\n";
    print_distribution(out, repertoire);
    out << "output distribution:\n";
    print_distribution(out, out_dist);
    return kSuccess;
}

int cmd_entropy(const Context& ctx, const std::string& system_file,
                const std::string& prior_file) {
    const auto loaded = load_system(ctx, system_file, prior_file);
    const Channel copy = copy_channel(loaded.prior.alphabet());
    const Bits h = shannon_entropy(loaded.prior);
    const Bits expected = expected_effective_information(copy, loaded.prior);
    const Bits h_out = shannon_entropy(output_distribution(loaded.system.channel, loaded.prior));
    const double diff = std::abs(h.value - expected.value);
    const bool ok = diff <= ctx.globals.tolerance;

    if (ctx.globals.format == Format::machine) {
        ctx.out << Json{{"command", "entropy"},
                        {"prior", to_document(loaded.prior)},
                        {"entropy", h.value},
                        {"expected_ei_copy", expected.value},
                        {"difference", diff},
                        {"output_entropy", h_out.value},
                        {"pass", ok}}
                       .dump(2)
                << '\n';
        return ok ? kSuccess : kVerificationFailure;
    }
    auto& out = ctx.out;
    out << "system: " << describe(loaded.system) << '\n';
    out << "prior: " << (loaded.uniform_prior ? "uniform" : prior_file) << '\n';
    out << "H(X) = " << fixed6(h.value) << " bits\n";
    out << "E[ei(copy)] = " << fixed6(expected.value) << " bits\n";
    out << "|diff| = " << fixed6(diff) << '\n';
    out << "H(Y) = " << fixed6(h_out.value) << " bits\n";
    out << "H(X) = E[ei(copy)]: " << pass_fail(ok) << '\n';
    return ok ? kSuccess : kVerificationFailure;
}

int cmd_mi(const Context& ctx, const std::string& system_file, const std::string& prior_file) {
    const auto loaded = load_system(ctx, system_file, prior_file);
    const Channel& m = loaded.system.channel;
    const Bits expected = expected_effective_information(m, loaded.prior);
    const Bits mi = mutual_information(m, loaded.prior);
    const double diff = std::abs(expected.value - mi.value);
    const bool ok = diff <= ctx.globals.tolerance;

    if (ctx.globals.format == Format::machine) {
        ctx.out << Json{{"command", "mi"},
                        {"prior", to_document(loaded.prior)},
                        {"expected_ei", expected.value},
                        {"mutual_information", mi.value},
                        {"difference", diff},
                        {"pass", ok}}
                       .dump(2)
                << '\n';
        return ok ? kSuccess : kVerificationFailure;
    }
    auto& out = ctx.out;
    out << "system: " << describe(loaded.system) << '\n';
    out << "prior: " << (loaded.uniform_prior ? "uniform" : prior_file) << '\n';
    out << "E[ei] = " << fixed6(expected.value) << " bits\n";
    out << "MI = " << fixed6(mi.value) << " bits\n";
    out << "|diff| = " << fixed6(diff) << '\n';
    out << "I(X;Y) = E[ei]: " << pass_fail(ok) << '\n';
    return ok ? kSuccess : kVerificationFailure;
}

int cmd_learn(const Context& ctx, const std::string& instance_file) {
    const Json doc = read_document(instance_file, ctx.in);
    const LearningInstance instance = parse_instance(doc);
    const auto c = learning::check_identities(instance.functions, instance.dataset,
                                                ctx.globals.enumeration());

    if (ctx.globals.format == Format::machine) {
        Json table = Json::array();
        for (const auto& row : c.report.table) {
            table.push_back({{"risk", std::to_string(row.risk.mismatches) + "/" +
                                          std::to_string(row.risk.length)},
                             {"risk_value", to_double(row.risk.value())},
                             {"hypotheses", row.hypotheses},
                             {"fraction", exact_json(row.fraction)}});
        }
        ctx.out << Json{{"command", "learn"},
                        {"instance", to_document(instance)},
                        {"num_points", c.num_points},
                        {"length", c.length},
                        {"num_functions", c.num_functions},
                        {"restrictions", c.restrictions},
                        {"vc_entropy", c.vc_entropy.value},
                        {"rademacher", exact_json(c.rademacher)},
                        {"expected_risk", exact_json(c.expected_risk)},
                        {"ei", c.ei.value},
                        {"falsification",
                         {{"total_hypotheses_bits", c.report.total_hypotheses_bits.value},
                          {"fitted_bits", c.report.fitted_bits.value},
                          {"falsified_bits", c.report.falsified_bits.value},
                          {"weighted_risk", exact_json(c.report.weighted_risk())},
                          {"table", std::move(table)}}},
                        {"checks",
                         {{"prop1", c.vc_identity},
                          {"prop2", c.rademacher_identity},
                          {"report", c.report_coherent}}}}
                       .dump(2)
                << '\n';
        return c.passed() ? kSuccess : kVerificationFailure;
    }

    auto& out = ctx.out;
    out << "|X| = " << c.num_points << '\n';
    out << "l = " << c.length << '\n';
    out << "|F| = " << c.num_functions << '\n';
    out << "|q_D(F)| = " << c.restrictions << '\n';
    out << "V = " << fixed6(c.vc_entropy.value) << " bits\n";
    out << "R = " << exact(c.rademacher) << '\n';
    out << "E[eps] = " << exact(c.expected_risk) << '\n';
    out << "ei(L,0) = " << fixed6(c.ei.value) << " bits\n";
    out << "falsification:\n";
    out << "  total hypotheses = " << fixed6(c.report.total_hypotheses_bits.value) << " bits\n";
    out << "  fitted = " << fixed6(c.report.fitted_bits.value) << " bits\n";
    out << "  falsified = " << fixed6(c.report.falsified_bits.value) << " bits\n";
    out << "  eps  hypotheses  fraction\n";
    for (const auto& row : c.report.table) {
        out << "  " << row.risk.mismatches << '/' << row.risk.length << "  " << row.hypotheses
            << "  " << exact(row.fraction) << '\n';
    }
    out << "  sum fraction * eps = " << exact(c.report.weighted_risk()) << '\n';
    out << "Prop1: ei = l - V: " << pass_fail(c.vc_identity) << '\n';
    out << "Prop2: E[eps] = (1-R)/2: " << pass_fail(c.rademacher_identity) << '\n';
    out << "falsification report: " << pass_fail(c.report_coherent) << '\n';
    return c.passed() ? kSuccess : kVerificationFailure;
}

// Names of the checks an instance fails; empty on success.
std::vector<std::string> verify_instance(const LearningInstance& instance,
                                         InstanceGenerator& gen,
                                         const learning::EnumerationOptions& options) {
    using namespace learning;
    const auto& f = instance.functions;
    const auto& d = instance.dataset;
    std::vector<std::string> failed;

    const auto c = check_identities(f, d, options);
    if (!c.vc_identity) failed.emplace_back("prop1");
    if (!c.rademacher_identity) failed.emplace_back("prop2");
    if (!c.report_coherent) failed.emplace_back("falsification-report");

    const std::uint64_t max_restrictions =
        std::min<std::uint64_t>(f.size(), std::uint64_t{1} << d.size());
    if (c.restrictions < 1 || c.restrictions > max_restrictions) {
        failed.emplace_back("restriction-bound");
    }
    std::uint64_t total = 0;
    for (auto count : c.distribution.counts) total += count;
    if (total != c.distribution.total()) failed.emplace_back("partition");

    if (rademacher_by_definition(f, d, options) != c.rademacher) {
        failed.emplace_back("rademacher-equivalence");
    }

    const FunctionClass neg = f.negated();
    const auto dn = risk_distribution(neg, d, options);
    if (vc_entropy(neg, d) != c.vc_entropy || rademacher(neg, d, options) != c.rademacher ||
        expected_risk(dn) != c.expected_risk || ei_of_learner(dn) != c.ei) {
        failed.emplace_back("negation-symmetry");
    }

    if (auto extra = gen.labeling_outside(f)) {
        auto grown = f.functions();
        grown.push_back(*extra);
        const FunctionClass bigger(f.points(), std::move(grown));
        const auto db = risk_distribution(bigger, d, options);
        if (vc_entropy(bigger, d) < c.vc_entropy || rademacher(bigger, d, options) < c.rademacher ||
            expected_risk(db) > c.expected_risk || ei_of_learner(db) > c.ei) {
            failed.emplace_back("monotonicity");
        }
    }

    try {
        information_gain_of_perfect_fit(f, d, options);
    } catch (const std::logic_error&) {
        failed.emplace_back("information-gain");
    }
    return failed;
}

int cmd_verify(const Context& ctx, std::uint64_t seed, std::size_t count, std::size_t min_points,
               std::size_t max_points) {
    if (min_points < 1 || min_points > max_points) {
        throw ValidationError("point bounds must satisfy 1 <= min-points <= max-points");
    }
    if (max_points > ctx.globals.cap) {
        throw CapExceededError("max-points = " + std::to_string(max_points) +
                               " exceeds the enumeration cap of " +
                               std::to_string(ctx.globals.cap));
    }
    InstanceGenerator gen(seed);
    const auto options = ctx.globals.enumeration();

    std::size_t passed = 0;
    Json failures = Json::array();
    for (std::size_t i = 0; i < count; ++i) {
        const LearningInstance instance = gen.next(min_points, max_points);
        const auto failed = verify_instance(instance, gen, options);
        if (failed.empty()) {
            ++passed;
            continue;
        }
        if (ctx.globals.format == Format::table) {
            ctx.out << "instance " << i << " (|X|=" << instance.functions.points().size()
                    << ", l=" << instance.dataset.size() << ", |F|=" << instance.functions.size()
                    << ") FAIL:";
            for (const auto& name : failed) ctx.out << ' ' << name;
            ctx.out << '\n' << to_document(instance).dump() << '\n';
        }
        failures.push_back({{"index", i}, {"failed", failed}, {"instance", to_document(instance)}});
    }

    const bool ok = passed == count;
    if (ctx.globals.format == Format::machine) {
        ctx.out << Json{{"command", "verify"},
                        {"seed", seed},
                        {"count", count},
                        {"passed", passed},
                        {"failures", std::move(failures)}}
                       .dump(2)
                << '\n';
    } else {
        ctx.out << passed << '/' << count << " instances " << pass_fail(ok) << '\n';
    }
    return ok ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    GlobalOptions globals;
    CLI::App app{"Effective information, Shannon identities, and learning-theory capacities "
                 "for finite discrete systems"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    std::string format = "table";
    app.add_option("--tolerance", globals.tolerance, "Absolute tolerance for validation and identity checks")
        ->check(CLI::PositiveNumber);
    app.add_option("--cap", globals.cap, "Largest point count enumerated exhaustively")
        ->check(CLI::Range(std::size_t{1}, learning::kMaxCap));
    app.add_option("--threads", globals.threads, "Threads for hypothesis enumeration")
        ->check(CLI::Range(1U, 256U));
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "machine"}));

    std::string system_file;
    std::string prior_file;
    std::string symbol;
    auto* ei = app.add_subcommand("ei", "Effective information of one output");
    ei->add_option("system", system_file, "Channel or map document")->required();
    ei->add_option("output", symbol, "Output symbol")->required();
    ei->add_option("--prior", prior_file, "Prior document (default uniform)");
    ei->fallthrough();

    auto* entropy = app.add_subcommand("entropy", "H(X) as expected ei of the copy channel");
    entropy->add_option("system", system_file, "Channel or map document")->required();
    entropy->add_option("--prior", prior_file, "Prior document (default uniform)");
    entropy->fallthrough();

    auto* mi = app.add_subcommand("mi", "Mutual information as expected ei");
    mi->add_option("system", system_file, "Channel or map document")->required();
    mi->add_option("--prior", prior_file, "Prior document (default uniform)");
    mi->fallthrough();

    std::string instance_file;
    auto* learn = app.add_subcommand("learn", "Capacities and identities for a learning instance");
    learn->add_option("instance", instance_file, "Learning-instance document")->required();
    learn->fallthrough();

    std::uint64_t seed = 1;
    std::size_t count = 500;
    std::size_t min_points = 3;
    std::size_t max_points = 10;
    auto* verify = app.add_subcommand("verify", "Check the identities on random instances");
    verify->add_option("--seed", seed, "Generator seed");
    verify->add_option("--count", count, "Number of instances");
    verify->add_option("--min-points", min_points, "Smallest |X|");
    verify->add_option("--max-points", max_points, "Largest |X|");
    verify->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    globals.format = format == "machine" ? Format::machine : Format::table;

    const Context ctx{globals, in, out};
    try {
        if (*ei) return cmd_ei(ctx, system_file, symbol, prior_file);
        if (*entropy) return cmd_entropy(ctx, system_file, prior_file);
        if (*mi) return cmd_mi(ctx, system_file, prior_file);
        if (*learn) return cmd_learn(ctx, instance_file);
        return cmd_verify(ctx, seed, count, min_points, max_points);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const UndefinedQuantityError& e) {
        err << "error: " << e.what() << '\n';
        return kUndefinedQuantity;
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << '\n';
        return kResourceCap;
    }
}

}  // namespace effinfo::cli
