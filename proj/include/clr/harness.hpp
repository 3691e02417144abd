#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "clr/oracle.hpp"

namespace clr {

using json = nlohmann::json;

inline constexpr const char* kArtifactName = "clr-harness";
inline constexpr const char* kArtifactVersion = "1.0.0";

struct SuiteSpec {
    std::string suite;
    // 0 keeps the suite's own range.
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    OracleConfig oracle;
    int workers = 1;
    // Lift the n <= 6, m <= 4 bound.
    bool allow_large = false;

    json to_json() const;
    static SuiteSpec from_json(const json& j);
};

enum class CheckVerdict { Pass, ProbablyPass, Fail, Error };
std::string verdict_name(CheckVerdict v);
CheckVerdict verdict_from_name(const std::string& s);

struct CheckResult {
    CheckVerdict verdict = CheckVerdict::Pass;
    std::string detail;
    // Extra data for a failure (oracle trial, mismatching item).
    json evidence;
};

using SkewPairs = std::vector<std::pair<SkewExpr, SkewExpr>>;

struct Check {
    std::string id;
    std::string anchor;
    json params;
    std::function<CheckResult(const OracleConfig&)> run;
    // Oracle checks: the identities, rebuilt for witness replay.
    std::function<SkewPairs()> pairs;
};

struct CheckReport {
    std::string id;
    std::string anchor;
    json params;
    CheckVerdict verdict = CheckVerdict::Pass;
    std::string detail;
    std::uint64_t seed = 0;
    // Set for Fail: suite spec, check id, seed and evidence.
    json witness;
    double seconds = 0.0;
};

std::vector<std::string> suite_names();
std::string suite_description(const std::string& name);
// Throws std::invalid_argument for unknown suites or out-of-bound parameters.
std::vector<Check> build_suite(const SuiteSpec& spec);

// Oracle configuration of one check, derived from the suite seed and the check id.
OracleConfig check_config(const SuiteSpec& spec, const std::string& id);

// Runs every check (up to spec.workers at a time); sorted by check id.
std::vector<CheckReport> run_suite(const SuiteSpec& spec);
std::vector<CheckReport> run_checks(const SuiteSpec& spec, const std::vector<Check>& checks);

enum class ReportFormat { Json, Text };
ReportFormat format_from_name(const std::string& s);
// Wall times appear in json only when timings is set; text always shows them.
std::string emit_report(const SuiteSpec& spec, const std::vector<CheckReport>& reports, ReportFormat format,
                        bool timings = false);

struct LoadedReport {
    SuiteSpec spec;
    std::vector<CheckReport> checks;
};
LoadedReport load_report(const std::string& text);

// 0 when nothing failed, 1 on Fail or Error.
int exit_code(const std::vector<CheckReport>& reports);

struct ReplayResult {
    std::string id;
    // True when the recorded failure shows up again.
    bool reproduced = false;
    std::string detail;
};
// Accepts a report (replays its failed checks) or a single witness object.
std::vector<ReplayResult> replay(const std::string& text);

}  // namespace clr
