// One PASS/FAIL line per acceptance criterion.
//
//   acceptance [--expect-fail 8,...] [--seed S] [--json FILE]
//
// Exit status is 0 when the failing criteria are exactly the expected set.

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>

#include "CLI11.hpp"

#include "clr/harness.hpp"

using namespace clr;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> suites;
    double limit_seconds;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> c{
        {1, "printed examples", {"paper-examples"}, 10},
        {2, "R-sequences realize the cluster R-matrices", {"r-cluster"}, 120},
        {3, "braid, involution, far commutation", {"braid"}, 120},
        {4, "tropical y after the R-sequence", {"y-tropical"}, 120},
        {5, "exact quantum torus identities", {"qtorus-exact"}, 30},
        {6,
         "randomized oracle suites",
         {"ybr-quantum", "commpres", "q-yrcluster", "psi-rr", "lens-push", "loop-invariance"},
         600},
        {7, "structural oracles", {"structural"}, 120},
        {8, "property suites", {"properties"}, 300},
    };
    return c;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    std::vector<int> expect_fail;
    std::uint64_t seed = 0;
    std::string json_out;
    app.add_option("--expect-fail", expect_fail, "Criteria known to fail")->delimiter(',');
    app.add_option("--seed", seed, "Suite seed");
    app.add_option("--json", json_out, "Also write every suite report to this file");
    CLI11_PARSE(app, argc, argv);

    std::set<int> failed;
    json all = json::object();
    for (auto& c : criteria()) {
        auto t0 = std::chrono::steady_clock::now();
        int checks = 0;
        std::vector<std::string> bad;
        bool shape_ok = true;
        for (auto& name : c.suites) {
            SuiteSpec spec;
            spec.suite = name;
            spec.seed = seed;
            // T = 6 trials over L in {5,7,11} with 61-bit primes.
            spec.oracle.trials = 6;
            spec.oracle.root_orders = {5, 7, 11};
            spec.oracle.prime_bits = 61;
            auto reports = run_suite(spec);
            checks += static_cast<int>(reports.size());
            shape_ok = shape_ok && !reports.empty();
            for (auto& r : reports) {
                bool ok = r.verdict == CheckVerdict::Pass || r.verdict == CheckVerdict::ProbablyPass;
                if (!ok) bad.push_back(r.id + " [" + verdict_name(r.verdict) + ": " + r.detail + "]");
            }
            if (!json_out.empty()) all[name] = json::parse(emit_report(spec, reports, ReportFormat::Json, true));
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs <= c.limit_seconds;
        bool pass = bad.empty() && shape_ok && in_time;
        if (!pass) failed.insert(c.number);

        std::printf("criterion %d %s  %s: %d checks, %zu failed, %.1fs (limit %.0fs)\n", c.number, pass ? "PASS" : "FAIL",
                    c.title.c_str(), checks, bad.size(), secs, c.limit_seconds);
        if (!in_time) std::printf("    over the time limit\n");
        for (auto& b : bad) std::printf("    %s\n", b.c_str());
        std::fflush(stdout);
    }

    if (!json_out.empty()) {
        std::ofstream f(json_out);
        f << all.dump(2) << "\n";
    }

    std::set<int> expected(expect_fail.begin(), expect_fail.end());
    std::printf("%zu of %zu criteria pass", criteria().size() - failed.size(), criteria().size());
    if (!expected.empty()) {
        std::printf("; expected failures:");
        for (int e : expected) std::printf(" %d", e);
    }
    std::printf("\n");
    if (failed != expected) {
        std::printf("failing criteria differ from the expected set\n");
        return 1;
    }
    return 0;
}
