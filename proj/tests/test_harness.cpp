#include "doctest.h"

#include <fstream>
#include <sstream>

#include "clr/harness.hpp"

using namespace clr;

namespace {

SuiteSpec spec_for(const std::string& suite, std::uint64_t seed = 0)
{
    SuiteSpec s;
    s.suite = suite;
    s.seed = seed;
    return s;
}

}  // namespace

TEST_CASE("suite registry")
{
    auto names = suite_names();
    CHECK(names.size() >= 14);
    for (auto& n : names) CHECK_FALSE(suite_description(n).empty());
    CHECK_THROWS_AS(build_suite(spec_for("nosuch")), std::invalid_argument);
    SuiteSpec big = spec_for("r-cluster");
    big.n = 7;
    CHECK_THROWS_AS(build_suite(big), std::invalid_argument);
    big.allow_large = true;
    CHECK_NOTHROW(build_suite(big));
    SuiteSpec small = spec_for("braid");
    small.n = 2;
    CHECK_THROWS_AS(build_suite(small), std::invalid_argument);
}

TEST_CASE("empty suite gives an empty report")
{
    auto spec = spec_for("empty");
    auto reports = run_suite(spec);
    CHECK(reports.empty());
    CHECK(exit_code(reports) == 0);
    auto doc = json::parse(emit_report(spec, reports, ReportFormat::Json));
    CHECK(doc["checks"].empty());
    CHECK(doc["summary"]["total"] == 0);
    CHECK(doc["artifact"] == kArtifactName);
    CHECK(doc["version"] == kArtifactVersion);
}

TEST_CASE("json reports are byte-identical for the same spec and round-trip")
{
    auto spec = spec_for("qtorus-exact", 42);
    spec.n = 3;
    auto a = emit_report(spec, run_suite(spec), ReportFormat::Json);
    spec.workers = 3;
    auto b = emit_report(spec, run_suite(spec), ReportFormat::Json);
    CHECK(a == b);

    auto loaded = load_report(a);
    CHECK(loaded.spec.suite == "qtorus-exact");
    CHECK(loaded.spec.seed == 42);
    CHECK(loaded.spec.n == 3);
    CHECK(loaded.checks.size() == 6);
    spec.workers = 1;
    CHECK(emit_report(loaded.spec, loaded.checks, ReportFormat::Json) == a);
    CHECK(replay(a).empty());

    // Oracle seeds depend on the suite seed.
    auto other = spec_for("qtorus-exact", 43);
    other.n = 3;
    CHECK(check_config(spec, "x").seed != check_config(other, "x").seed);
    CHECK(check_config(spec, "x").seed != check_config(spec, "y").seed);
}

TEST_CASE("false identities fail with replayable witnesses")
{
    auto spec = spec_for("false-identity", 7);
    auto reports = run_suite(spec);
    REQUIRE(reports.size() == 2);
    CHECK(exit_code(reports) == 1);
    for (auto& r : reports) {
        CHECK(r.verdict == CheckVerdict::Fail);
        REQUIRE(r.witness.is_object());
        CHECK(r.witness["check"] == r.id);
        CHECK(r.witness["spec"]["seed"] == 7);
    }
    const auto& oracle = reports[1];
    CHECK(oracle.id == "false-identity/p1q1-commute");
    CHECK(oracle.witness["evidence"]["kind"] == "oracle");
    CHECK(oracle.witness["evidence"]["trial"].contains("zeta"));

    auto text = emit_report(spec, reports, ReportFormat::Json);
    auto doc = json::parse(text);
    CHECK(doc["checks"][1]["witness"] == oracle.witness);
    auto results = replay(text);
    REQUIRE(results.size() == 2);
    for (auto& r : results) CHECK(r.reproduced);

    // A single witness replays as well.
    auto single = replay(oracle.witness.dump());
    REQUIRE(single.size() == 1);
    CHECK(single[0].reproduced);
    CHECK(single[0].detail.find("reproduced") != std::string::npos);

    // A witness pointing at a true identity does not reproduce.
    json w = oracle.witness;
    w["spec"]["suite"] = "qtorus-exact";
    w["check"] = "qtorus-exact/pq-kappa-n3";
    w["evidence"] = json{{"kind", "exact"}};
    auto bogus = replay(w.dump());
    REQUIRE(bogus.size() == 1);
    CHECK_FALSE(bogus[0].reproduced);
    CHECK_THROWS(replay("{\"check\":\"nosuch\",\"spec\":{\"suite\":\"false-identity\"}}"));
}

TEST_CASE("text format has one line per check")
{
    auto spec = spec_for("paper-examples");
    auto reports = run_suite(spec);
    CHECK(exit_code(reports) == 0);
    auto text = emit_report(spec, reports, ReportFormat::Text);
    int lines = 0;
    for (char c : text) lines += c == '\n';
    CHECK(lines == static_cast<int>(reports.size()) + 2);
    for (auto& r : reports) {
        auto pos = text.find(r.id);
        REQUIRE(pos != std::string::npos);
        auto start = text.rfind('\n', pos) + 1;
        CHECK(text.compare(start, verdict_name(r.verdict).size(), verdict_name(r.verdict)) == 0);
    }
    CHECK(format_from_name("text") == ReportFormat::Text);
    CHECK_THROWS(format_from_name("xml"));
    CHECK(verdict_from_name("ProbablyPass") == CheckVerdict::ProbablyPass);
}

TEST_CASE("timings only appear on request")
{
    auto spec = spec_for("structural");
    spec.n = 3;
    auto reports = run_suite(spec);
    auto plain = json::parse(emit_report(spec, reports, ReportFormat::Json));
    auto timed = json::parse(emit_report(spec, reports, ReportFormat::Json, true));
    CHECK_FALSE(plain["checks"][0].contains("seconds"));
    CHECK(timed["checks"][0].contains("seconds"));
}

TEST_CASE("exceptions become Error verdicts without aborting the suite")
{
    auto spec = spec_for("empty");
    std::vector<Check> checks;
    checks.push_back(Check{"b/throws", "anchor", json::object(),
                           [](const OracleConfig&) -> CheckResult { throw std::runtime_error("boom"); }, nullptr});
    checks.push_back(Check{"a/ok", "anchor", json::object(),
                           [](const OracleConfig&) { return CheckResult{CheckVerdict::Pass, "fine", nullptr}; }, nullptr});
    auto reports = run_checks(spec, checks);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].id == "a/ok");
    CHECK(reports[1].verdict == CheckVerdict::Error);
    CHECK(reports[1].detail.find("boom") != std::string::npos);
    CHECK(exit_code(reports) == 1);
}

TEST_CASE("ybr-quantum golden report")
{
    std::ifstream f(std::string(CLR_GOLDEN_DIR) + "/ybr-quantum-seed0.json", std::ios::binary);
    REQUIRE(f);
    std::ostringstream golden;
    golden << f.rdbuf();
    auto spec = spec_for("ybr-quantum");
    spec.n = 3;
    spec.m = 3;
    auto reports = run_suite(spec);
    for (auto& r : reports) CHECK(r.verdict == CheckVerdict::ProbablyPass);
    CHECK(emit_report(spec, reports, ReportFormat::Json) == golden.str());
}
