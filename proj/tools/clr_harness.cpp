#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "clr/harness.hpp"
#include "clr/network.hpp"
#include "clr/rmatrices.hpp"
#include "clr/seeds.hpp"

using namespace clr;

namespace {

struct Options {
    int n = 0;
    int m = 0;
    int trials = 6;
    std::vector<unsigned> root_orders{5, 7, 11};
    unsigned prime_bits = 61;
    std::uint64_t seed = 0;
    std::string format = "text";
    int workers = 1;
    std::string out;
    std::size_t max_dim = 400;
    bool timings = false;
    bool allow_large = false;
};

struct ComputeArgs {
    std::string object;
    int k = 1;
    int r = 1;
    int c = 1;
    std::string shape;
    std::string intervals;
    bool enriched = false;
};

int emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        std::cerr << "cannot write " << o.out << "\n";
        return 2;
    }
    f << text;
    return 0;
}

int need(int v, int fallback) { return v ? v : fallback; }

// "4,5;3,3" -> (4,5),(3,3)
std::vector<Interval> parse_intervals(const std::string& text)
{
    std::vector<Interval> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ';')) {
        auto comma = item.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("interval '" + item + "' is not a,b");
        out.push_back({std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1))});
    }
    if (out.empty()) throw std::invalid_argument("no intervals given");
    return out;
}

template <class T>
std::string images(const VarSetPtr& v, const std::vector<T>& f)
{
    std::string s;
    for (int a = 0; a < v->size(); ++a) {
        std::string img = f[static_cast<std::size_t>(a)].str();
        if (img == v->name(a)) continue;
        s += v->name(a) + " -> " + img + "\n";
    }
    return s;
}

std::string compute(const Options& o, const ComputeArgs& a)
{
    const int n = need(o.n, 3);
    if (!o.allow_large && (n > 6 || o.m > 4)) throw std::invalid_argument("n <= 6 and m <= 4 unless --allow-large");
    const std::string& obj = a.object;
    if (obj == "loop-e") {
        auto net = CylNetwork::make(n, need(o.m, 3));
        return loop_e(net, a.k, a.r).str() + "\n";
    }
    if (obj == "loop-schur") {
        auto net = CylNetwork::make(n, need(o.m, 3));
        return loop_schur(net, SkewShape::parse(a.shape.empty() ? "2,1" : a.shape), a.r).str() + "\n";
    }
    if (obj == "cylindric-schur") {
        auto D = a.shape.empty() ? CylindricShape::from_skew(3, 1, SkewShape::from_partitions({2, 1}))
                                 : CylindricShape::parse(a.shape);
        auto net = CylNetwork::make(D.n(), need(o.m, 3));
        return cylindric_loop_schur(net, D, a.r).str() + "\n";
    }
    if (obj == "e-expansion") {
        const int m = need(o.m, 3);
        auto spec = parse_intervals(a.intervals.empty() ? "4,5;3,3" : a.intervals);
        auto terms = expand_measurement_in_e(n, m, spec);
        return e_terms_str(terms) + "\n";
    }
    if (obj == "geometric-r") {
        auto v = pq_vars(n);
        return images(v, geometric_R(v, n, var_indices(v, pq_names(n, 'p')), var_indices(v, pq_names(n, 'q'))));
    }
    if (obj == "cluster-r-x") {
        const int m = need(o.m, 2);
        auto q = a.enriched ? build_Q_tilde(n, m) : build_Q(n, m);
        auto v = XSeed::initial(q).vars();
        return images(v, a.enriched ? closed_tilde_R(v, n, a.c) : closed_R_x(v, n, a.c));
    }
    if (obj == "cluster-r-y") {
        const int m = need(o.m, 2);
        auto v = YSeedUniversal::initial(build_Q(n, m)).vars();
        return images(v, closed_R_y_classical(v, n, m, a.c));
    }
    if (obj == "quiver") {
        const int m = need(o.m, 2);
        return (a.enriched ? build_Q_tilde(n, m) : build_Q(n, m)).export_text();
    }
    throw std::invalid_argument("unknown object '" + obj + "'");
}

SuiteSpec make_spec(const Options& o, const std::string& suite)
{
    SuiteSpec s;
    s.suite = suite;
    s.n = o.n;
    s.m = o.m;
    s.seed = o.seed;
    s.workers = o.workers;
    s.allow_large = o.allow_large;
    s.oracle.trials = o.trials;
    s.oracle.root_orders = o.root_orders;
    s.oracle.prime_bits = o.prime_bits;
    s.oracle.max_dim = o.max_dim;
    return s;
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verification harness for cluster R-matrices, quantum tori and loop symmetric functions"};
    app.require_subcommand(1);
    app.set_config("--config", "", "File of key = value lines mirroring the flags");

    Options o;
    app.add_option("--n", o.n, "Rank n (0 keeps the suite default)");
    app.add_option("--m", o.m, "Number of columns m (0 keeps the suite default)");
    app.add_option("--trials", o.trials, "Oracle trials")->check(CLI::PositiveNumber);
    app.add_option("--root-orders", o.root_orders, "Orders L of the roots of unity")->delimiter(',');
    app.add_option("--prime-bits", o.prime_bits, "Bit size of the oracle primes")->check(CLI::Range(8u, 62u));
    app.add_option("--seed", o.seed, "Random seed");
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--workers", o.workers, "Concurrent checks")->check(CLI::PositiveNumber);
    app.add_option("--out", o.out, "Write the output to a file");
    app.add_option("--max-dim", o.max_dim, "Largest oracle matrix dimension");
    app.add_flag("--timings", o.timings, "Include wall times in json reports");
    app.add_flag("--allow-large", o.allow_large, "Lift the n <= 6, m <= 4 bound");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->fallthrough();
    verify->add_option("suite", suite, "Suite name")->required();
    auto* list = app.add_subcommand("list", "List the suites");

    ComputeArgs ca;
    auto* comp = app.add_subcommand("compute", "Compute one object");
    comp->fallthrough();
    comp->add_option("object", ca.object,
                     "loop-e | loop-schur | cylindric-schur | e-expansion | geometric-r | cluster-r-x | cluster-r-y | quiver")
        ->required();
    comp->add_option("--k", ca.k, "Degree of e_k");
    comp->add_option("--r", ca.r, "Index r of e_k^(r) or s^(r)");
    comp->add_option("--c", ca.c, "Cycle of the cluster R-matrix");
    comp->add_option("--shape", ca.shape, "Skew shape \"3,2/1\" or cylindric shape \"n;s;top:bot,...\"");
    comp->add_option("--intervals", ca.intervals, "Path intervals \"a,b;a,b\"");
    comp->add_flag("--enriched", ca.enriched, "Use the quiver with frozen vertices");

    std::string witness_file;
    auto* rep = app.add_subcommand("replay", "Replay the witnesses of a report or a single witness");
    rep->fallthrough();
    rep->add_option("file", witness_file, "Report or witness json")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*list) {
            std::string s;
            for (auto& name : suite_names()) s += name + "  " + suite_description(name) + "\n";
            return emit(o, s);
        }
        if (*verify) {
            SuiteSpec spec = make_spec(o, suite);
            auto reports = run_suite(spec);
            if (int rc = emit(o, emit_report(spec, reports, format_from_name(o.format), o.timings))) return rc;
            return exit_code(reports);
        }
        if (*comp) return emit(o, compute(o, ca));
        if (*rep) {
            auto results = replay(read_file(witness_file));
            std::string s;
            bool any = false;
            for (auto& r : results) {
                s += std::string(r.reproduced ? "REPRODUCED " : "NOT-REPRODUCED ") + r.id + "  " + r.detail + "\n";
                any = any || r.reproduced;
            }
            if (results.empty()) s = "no witnesses\n";
            if (int rc = emit(o, s)) return rc;
            return any ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
