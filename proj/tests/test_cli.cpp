#include <doctest.h>

#include "effinfo/cli/commands.hpp"
#include "effinfo/cli/documents.hpp"
#include "effinfo/info.hpp"
#include "golden_runner.hpp"

using namespace effinfo;
using namespace effinfo::cli;

namespace {

const std::filesystem::path kGolden{EFFINFO_GOLDEN_DIR};

Json machine(const std::vector<std::string>& args) {
    auto with_format = args;
    with_format.insert(with_format.begin(), {"--format", "machine"});
    const auto r = golden::run_in(kGolden, with_format);
    REQUIRE(r.exit_code == kSuccess);
    return parse_text(r.out);
}

}  // namespace

TEST_CASE("golden cases") {
    for (const auto& o : golden::run_all(kGolden)) {
        INFO(o.name << ": " << o.detail);
        CHECK(o.passed);
    }
}

TEST_CASE("machine output of ei re-parses to equal objects") {
    const auto doc = machine({"ei", "noisy.channel.json", "r1", "--prior", "noisy.prior.json"});
    const Channel m = parse_channel(doc.at("channel"));
    CHECK(m == parse_channel(parse_text(golden::slurp(kGolden / "noisy.channel.json"))));
    const Distribution prior = parse_prior(doc.at("prior"), m.input());
    CHECK(prior == parse_prior(parse_text(golden::slurp(kGolden / "noisy.prior.json")), m.input()));
    CHECK(parse_prior(doc.at("actual_repertoire"), m.input()) == actual_repertoire(m, prior, 1));
    CHECK(parse_prior(doc.at("output_distribution"), m.output()) == output_distribution(m, prior));
    CHECK(doc.at("ei").get<double>() == effective_information(m, prior, 1).value);

    const auto mapdoc = machine({"ei", "three_to_one.map.json", "A"});
    CHECK(parse_map(mapdoc.at("map")) ==
          parse_map(parse_text(golden::slurp(kGolden / "three_to_one.map.json"))));
}

TEST_CASE("machine output of learn re-parses to an equal instance") {
    const auto doc = machine({"learn", "mixed.instance.json"});
    const auto a = parse_instance(doc.at("instance"));
    const auto b = parse_instance(parse_text(golden::slurp(kGolden / "mixed.instance.json")));
    CHECK(a.functions == b.functions);
    CHECK(a.dataset == b.dataset);
    CHECK(doc["checks"]["prop1"].get<bool>());
    CHECK(doc["checks"]["prop2"].get<bool>());
    CHECK(doc["rademacher"]["exact"] == "2/3");
    CHECK(doc["expected_risk"]["exact"] == "1/6");
}

TEST_CASE("verify machine output and determinism") {
    const std::vector<std::string> args{"--format", "machine", "verify", "--seed", "9",
                                        "--count", "50", "--min-points", "3", "--max-points", "9"};
    const auto first = golden::run_in(kGolden, args);
    const auto second = golden::run_in(kGolden, args);
    CHECK(first.exit_code == kSuccess);
    CHECK(first.out == second.out);
    const auto doc = parse_text(first.out);
    CHECK(doc["passed"] == 50);
    CHECK(doc["failures"].empty());

    const auto threaded = golden::run_in(
        kGolden, {"--threads", "4", "verify", "--seed", "9", "--count", "50", "--max-points", "9"});
    const auto serial =
        golden::run_in(kGolden, {"verify", "--seed", "9", "--count", "50", "--max-points", "9"});
    CHECK(threaded.out == serial.out);
}

TEST_CASE("tolerance flag governs identity checks") {
    const auto r = golden::run_in(kGolden, {"--tolerance", "1e-3", "mi", "copy3.channel.json"});
    CHECK(r.exit_code == kSuccess);
    const auto bad = golden::run_in(kGolden, {"--tolerance", "-1", "mi", "copy3.channel.json"});
    CHECK(bad.exit_code == kInputError);
}

TEST_CASE("help exits cleanly") {
    const auto r = golden::run_in(kGolden, {"--help"});
    CHECK(r.exit_code == kSuccess);
    CHECK(r.out.find("learn") != std::string::npos);
}
