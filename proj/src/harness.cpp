#include "clr/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <thread>

#include "checks.hpp"

namespace clr {

namespace detail {

Check exact_check(std::string id, std::string anchor, json params, std::function<Mismatch()> body)
{
    Check c{std::move(id), std::move(anchor), std::move(params), nullptr, nullptr};
    c.run = [body = std::move(body)](const OracleConfig&) {
        CheckResult r;
        if (auto bad = body()) {
            r.verdict = CheckVerdict::Fail;
            r.detail = *bad;
            r.evidence = json{{"kind", "exact"}, {"mismatch", *bad}};
        } else {
            r.verdict = CheckVerdict::Pass;
            r.detail = "exact";
        }
        return r;
    };
    return c;
}

namespace {

std::string orders_str(const std::vector<unsigned>& v)
{
    std::string s;
    for (unsigned x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

}  // namespace

Check oracle_check(std::string id, std::string anchor, json params, std::function<SkewPairs()> build,
                   bool expect_equal)
{
    Check c{std::move(id), std::move(anchor), std::move(params), nullptr, build};
    c.run = [build, expect_equal](const OracleConfig& cfg) {
        SkewPairs pairs = build();
        if (pairs.empty()) throw std::logic_error("oracle check without identities");
        Verdict v = equal_skew_all(pairs, cfg);
        CheckResult r;
        const std::string info = std::to_string(pairs.size()) + " identities, " + std::to_string(v.trials) +
                                 " trials, orders " + orders_str(v.root_orders);
        switch (v.kind) {
        case Verdict::Kind::ProbablyEqual:
            r.verdict = expect_equal ? CheckVerdict::ProbablyPass : CheckVerdict::Fail;
            r.detail = expect_equal ? info : "expected a difference, none found; " + info;
            if (!expect_equal) r.evidence = json{{"kind", "control"}};
            break;
        case Verdict::Kind::NotEqual:
            if (expect_equal) {
                r.verdict = CheckVerdict::Fail;
                r.detail = "identity " + std::to_string(v.failing_pair) + " differs; " + info;
                r.evidence = json{{"kind", "oracle"}, {"failing_pair", v.failing_pair}};
                if (v.witness) r.evidence["trial"] = json::parse(v.witness->to_json());
            } else {
                r.verdict = CheckVerdict::Pass;
                r.detail = "difference certified at identity " + std::to_string(v.failing_pair);
            }
            break;
        case Verdict::Kind::ExhaustedRetries:
            r.verdict = CheckVerdict::Error;
            r.detail = "oracle retries exhausted; " + info;
            break;
        }
        return r;
    };
    return c;
}

}  // namespace detail

json SuiteSpec::to_json() const
{
    return json{{"suite", suite},
                {"n", n},
                {"m", m},
                {"seed", seed},
                {"trials", oracle.trials},
                {"root_orders", oracle.root_orders},
                {"prime_bits", oracle.prime_bits},
                {"max_dim", oracle.max_dim},
                {"max_retries", oracle.max_retries},
                {"allow_large", allow_large}};
}

SuiteSpec SuiteSpec::from_json(const json& j)
{
    SuiteSpec s;
    s.suite = j.at("suite").get<std::string>();
    s.n = j.value("n", 0);
    s.m = j.value("m", 0);
    s.seed = j.value("seed", std::uint64_t{0});
    s.oracle.trials = j.value("trials", s.oracle.trials);
    s.oracle.root_orders = j.value("root_orders", s.oracle.root_orders);
    s.oracle.prime_bits = j.value("prime_bits", s.oracle.prime_bits);
    s.oracle.max_dim = j.value("max_dim", s.oracle.max_dim);
    s.oracle.max_retries = j.value("max_retries", s.oracle.max_retries);
    s.allow_large = j.value("allow_large", false);
    return s;
}

std::string verdict_name(CheckVerdict v)
{
    switch (v) {
    case CheckVerdict::Pass: return "Pass";
    case CheckVerdict::ProbablyPass: return "ProbablyPass";
    case CheckVerdict::Fail: return "Fail";
    case CheckVerdict::Error: return "Error";
    }
    return "Error";
}

CheckVerdict verdict_from_name(const std::string& s)
{
    for (auto v : {CheckVerdict::Pass, CheckVerdict::ProbablyPass, CheckVerdict::Fail, CheckVerdict::Error}) {
        if (verdict_name(v) == s) return v;
    }
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

OracleConfig check_config(const SuiteSpec& spec, const std::string& id)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : id) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    // splitmix64 finalizer over seed ^ hash(id).
    std::uint64_t z = spec.seed ^ h;
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    OracleConfig cfg = spec.oracle;
    cfg.seed = z;
    cfg.workers = 1;
    return cfg;
}

namespace {

json make_witness(const SuiteSpec& spec, const CheckReport& r, const json& evidence)
{
    return json{{"artifact", kArtifactName}, {"version", kArtifactVersion}, {"spec", spec.to_json()},
                {"check", r.id},          {"seed", r.seed},                {"evidence", evidence}};
}

CheckReport run_one(const SuiteSpec& spec, const Check& c)
{
    CheckReport r{c.id, c.anchor, c.params, CheckVerdict::Error, "", 0, nullptr, 0.0};
    OracleConfig cfg = check_config(spec, c.id);
    r.seed = cfg.seed;
    auto t0 = std::chrono::steady_clock::now();
    json evidence;
    try {
        CheckResult res = c.run(cfg);
        r.verdict = res.verdict;
        r.detail = res.detail;
        evidence = res.evidence;
    } catch (const std::exception& e) {
        r.verdict = CheckVerdict::Error;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.verdict == CheckVerdict::Fail) {
        if (evidence.is_null()) evidence = json{{"kind", "rerun"}};
        r.witness = make_witness(spec, r, evidence);
    }
    return r;
}

}  // namespace

std::vector<CheckReport> run_checks(const SuiteSpec& spec, const std::vector<Check>& checks)
{
    std::vector<CheckReport> out(checks.size());
    const int workers = std::max(1, std::min<int>(spec.workers, static_cast<int>(checks.size())));
    if (workers <= 1) {
        for (std::size_t k = 0; k < checks.size(); ++k) out[k] = run_one(spec, checks[k]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < checks.size(); k = next++) out[k] = run_one(spec, checks[k]);
            });
        }
        for (auto& t : pool) t.join();
    }
    std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
    return out;
}

std::vector<CheckReport> run_suite(const SuiteSpec& spec)
{
    return run_checks(spec, build_suite(spec));
}

ReportFormat format_from_name(const std::string& s)
{
    if (s == "json") return ReportFormat::Json;
    if (s == "text") return ReportFormat::Text;
    throw std::invalid_argument("format must be json or text");
}

std::string emit_report(const SuiteSpec& spec, const std::vector<CheckReport>& reports, ReportFormat format,
                        bool timings)
{
    std::map<std::string, int> counts{{"Pass", 0}, {"ProbablyPass", 0}, {"Fail", 0}, {"Error", 0}};
    for (auto& r : reports) ++counts[verdict_name(r.verdict)];

    if (format == ReportFormat::Json) {
        json checks = json::array();
        for (auto& r : reports) {
            json c{{"id", r.id},           {"anchor", r.anchor},
                   {"params", r.params},   {"verdict", verdict_name(r.verdict)},
                   {"detail", r.detail},   {"seed", r.seed}};
            if (!r.witness.is_null()) c["witness"] = r.witness;
            if (timings) c["seconds"] = r.seconds;
            checks.push_back(std::move(c));
        }
        json doc{{"artifact", kArtifactName},
                 {"version", kArtifactVersion},
                 {"spec", spec.to_json()},
                 {"checks", std::move(checks)},
                 {"summary", {{"total", reports.size()},
                              {"pass", counts["Pass"]},
                              {"probably_pass", counts["ProbablyPass"]},
                              {"fail", counts["Fail"]},
                              {"error", counts["Error"]}}}};
        return doc.dump(2) + "\n";
    }

    std::string out = std::string(kArtifactName) + " " + kArtifactVersion + "  suite " + spec.suite + "  seed " +
                      std::to_string(spec.seed) + "  trials " + std::to_string(spec.oracle.trials) + "\n";
    char buf[64];
    for (auto& r : reports) {
        std::snprintf(buf, sizeof buf, "%-13s %8.3fs  ", verdict_name(r.verdict).c_str(), r.seconds);
        out += buf + r.id + "  " + r.detail + "\n";
        if (!r.witness.is_null()) out += "    witness " + r.witness.dump() + "\n";
    }
    out += "total " + std::to_string(reports.size()) + "  pass " + std::to_string(counts["Pass"]) +
           "  probably_pass " + std::to_string(counts["ProbablyPass"]) + "  fail " + std::to_string(counts["Fail"]) +
           "  error " + std::to_string(counts["Error"]) + "\n";
    return out;
}

LoadedReport load_report(const std::string& text)
{
    json doc = json::parse(text);
    if (doc.value("artifact", "") != kArtifactName) throw std::invalid_argument("not a harness report");
    LoadedReport out;
    out.spec = SuiteSpec::from_json(doc.at("spec"));
    for (auto& c : doc.at("checks")) {
        CheckReport r;
        r.id = c.at("id").get<std::string>();
        r.anchor = c.value("anchor", "");
        r.params = c.value("params", json::object());
        r.verdict = verdict_from_name(c.at("verdict").get<std::string>());
        r.detail = c.value("detail", "");
        r.seed = c.value("seed", std::uint64_t{0});
        if (c.contains("witness")) r.witness = c.at("witness");
        r.seconds = c.value("seconds", 0.0);
        out.checks.push_back(std::move(r));
    }
    return out;
}

int exit_code(const std::vector<CheckReport>& reports)
{
    for (auto& r : reports) {
        if (r.verdict == CheckVerdict::Fail || r.verdict == CheckVerdict::Error) return 1;
    }
    return 0;
}

namespace {

ReplayResult replay_one(const json& w)
{
    ReplayResult out;
    out.id = w.at("check").get<std::string>();
    SuiteSpec spec = SuiteSpec::from_json(w.at("spec"));
    auto checks = build_suite(spec);
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.id == out.id; });
    if (it == checks.end()) throw std::invalid_argument("witness names unknown check " + out.id);
    const json& ev = w.value("evidence", json::object());
    if (ev.value("kind", "") == "oracle" && ev.contains("trial") && it->pairs) {
        SkewPairs pairs = it->pairs();
        int k = ev.at("failing_pair").get<int>();
        if (k < 0 || k >= static_cast<int>(pairs.size())) throw std::invalid_argument("witness pair out of range");
        Witness tw = Witness::from_json(ev.at("trial").dump());
        out.reproduced = replay_witness(pairs[static_cast<std::size_t>(k)].first, pairs[static_cast<std::size_t>(k)].second, tw);
        out.detail = std::string(out.reproduced ? "difference reproduced" : "difference not reproduced") +
                     " at p=" + std::to_string(tw.p) + " L=" + std::to_string(tw.L);
        return out;
    }
    OracleConfig cfg = check_config(spec, out.id);
    cfg.seed = w.value("seed", cfg.seed);
    CheckResult r = it->run(cfg);
    out.reproduced = r.verdict == CheckVerdict::Fail;
    out.detail = verdict_name(r.verdict) + ": " + r.detail;
    return out;
}

}  // namespace

std::vector<ReplayResult> replay(const std::string& text)
{
    json doc = json::parse(text);
    std::vector<ReplayResult> out;
    if (doc.contains("checks")) {
        for (auto& c : doc.at("checks")) {
            if (c.contains("witness")) out.push_back(replay_one(c.at("witness")));
        }
        return out;
    }
    if (doc.contains("check")) {
        out.push_back(replay_one(doc));
        return out;
    }
    throw std::invalid_argument("expected a report or a witness");
}

}  // namespace clr
