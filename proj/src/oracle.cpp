#include "clr/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>

#include "json.hpp"

namespace clr {

using u64 = std::uint64_t;
using i64 = std::int64_t;

std::vector<i64> SkewNormalForm::reconstruct() const
{
    const int n = size;
    std::vector<i64> J(static_cast<std::size_t>(n * n), 0);
    for (int t = 0; t < blocks(); ++t) {
        J[static_cast<std::size_t>(2 * t * n + 2 * t + 1)] = d[static_cast<std::size_t>(t)];
        J[static_cast<std::size_t>((2 * t + 1) * n + 2 * t)] = -d[static_cast<std::size_t>(t)];
    }
    std::vector<i64> out(static_cast<std::size_t>(n * n), 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            i64 s = 0;
            for (int r = 0; r < n; ++r) {
                for (int q = 0; q < n; ++q) {
                    i64 j = J[static_cast<std::size_t>(r * n + q)];
                    if (j) s += c(r, a) * j * c(q, b);
                }
            }
            out[static_cast<std::size_t>(a * n + b)] = s;
        }
    }
    return out;
}

SkewNormalForm skew_normal_form(const CommutationMatrix& lambda)
{
    const int n = lambda.size();
    auto U = [n](int r, int c) { return static_cast<std::size_t>(r * n + c); };
    std::vector<i64> M(lambda.matrix().begin(), lambda.matrix().end());
    // M = P lambda P^T; Pinv tracks P^{-1}.
    std::vector<i64> Pinv(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) Pinv[U(i, i)] = 1;

    auto swap_idx = [&](int r, int t) {
        if (r == t) return;
        for (int c = 0; c < n; ++c) std::swap(M[U(r, c)], M[U(t, c)]);
        for (int c = 0; c < n; ++c) std::swap(M[U(c, r)], M[U(c, t)]);
        for (int c = 0; c < n; ++c) std::swap(Pinv[U(c, r)], Pinv[U(c, t)]);
    };
    // Basis vector r += q * basis vector t.
    auto add_idx = [&](int r, int t, i64 q) {
        if (!q) return;
        for (int c = 0; c < n; ++c) M[U(r, c)] += q * M[U(t, c)];
        for (int c = 0; c < n; ++c) M[U(c, r)] += q * M[U(c, t)];
        for (int c = 0; c < n; ++c) Pinv[U(c, t)] -= q * Pinv[U(c, r)];
    };

    SkewNormalForm nf;
    nf.size = n;
    int s = 0;
    while (s + 1 < n) {
        int bi = -1, bj = -1;
        for (int i = s; i < n; ++i) {
            for (int j = s; j < n; ++j) {
                i64 v = M[U(i, j)];
                if (v && (bi < 0 || std::llabs(v) < std::llabs(M[U(bi, bj)]))) {
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi < 0) break;
        swap_idx(s, bi);
        if (bj == s) bj = bi;
        swap_idx(s + 1, bj);
        if (M[U(s, s + 1)] < 0) swap_idx(s, s + 1);
        const i64 dd = M[U(s, s + 1)];
        bool clean = true;
        for (int r = s + 2; r < n; ++r) {
            // M[s][r] -> M[s][r] - q d via r -= q (s+1); M[s+1][r] -> M[s+1][r] + q d via r += q s.
            i64 q1 = M[U(s, r)] / dd;
            add_idx(r, s + 1, -q1);
            i64 q2 = M[U(s + 1, r)] / dd;
            add_idx(r, s, q2);
            if (M[U(s, r)] || M[U(s + 1, r)]) clean = false;
        }
        if (clean) {
            nf.d.push_back(dd);
            s += 2;
        }
    }
    nf.C.assign(static_cast<std::size_t>(n * n), 0);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) nf.C[U(r, c)] = Pinv[U(c, r)];
    }
    if (nf.reconstruct() != std::vector<i64>(lambda.matrix().begin(), lambda.matrix().end())) {
        throw std::logic_error("skew normal form does not reconstruct lambda");
    }
    return nf;
}

namespace {

i64 mod_l(i64 x, i64 L)
{
    x %= L;
    return x < 0 ? x + L : x;
}

// Monomial matrices as (column, value) per row.
struct Mono {
    std::vector<int> col;
    FpVec val;
};

Mono mono_mul(const Mono& a, const Mono& b, u64 p)
{
    Mono r;
    r.col.resize(a.col.size());
    r.val.resize(a.col.size());
    for (std::size_t i = 0; i < a.col.size(); ++i) {
        auto c = static_cast<std::size_t>(a.col[i]);
        r.col[i] = b.col[c];
        r.val[i] = mulmod(a.val[i], b.val[c], p);
    }
    return r;
}

}  // namespace

void WeylAssignment::build()
{
    const int k = static_cast<int>(d.size());
    dim = 1;
    for (int t = 0; t < k; ++t) dim *= static_cast<int>(L);
    mats.clear();
    inv_mats.clear();
    cols.clear();
    inv_cols.clear();
    vals.clear();
    inv_vals.clear();
    const i64 Li = static_cast<i64>(L);
    std::vector<u64> zp(L);
    for (unsigned e = 0; e < L; ++e) zp[e] = powmod(zeta, e, p);
    for (std::size_t a = 0; a < exps.size(); ++a) {
        std::vector<int> col(static_cast<std::size_t>(dim));
        FpVec val(static_cast<std::size_t>(dim));
        std::vector<int> icol(static_cast<std::size_t>(dim));
        FpVec ival(static_cast<std::size_t>(dim));
        const u64 sinv = powmod(scalars[a], p - 2, p);
        for (int idx = 0; idx < dim; ++idx) {
            int rest = idx, out = 0, place = 1;
            i64 phase = 0;
            for (int t = 0; t < k; ++t) {
                i64 digit = rest % Li;
                rest /= static_cast<int>(Li);
                i64 u = exps[a][static_cast<std::size_t>(2 * t)];
                i64 v = exps[a][static_cast<std::size_t>(2 * t + 1)];
                i64 nd = mod_l(digit + v, Li);
                phase += mod_l(mod_l(d[static_cast<std::size_t>(t)], Li) * mod_l(u, Li) % Li * nd, Li);
                out += static_cast<int>(nd) * place;
                place *= static_cast<int>(Li);
            }
            u64 value = mulmod(scalars[a], zp[static_cast<std::size_t>(mod_l(phase, Li))], p);
            col[static_cast<std::size_t>(out)] = idx;
            val[static_cast<std::size_t>(out)] = value;
            icol[static_cast<std::size_t>(idx)] = out;
            ival[static_cast<std::size_t>(idx)] = mulmod(sinv, zp[static_cast<std::size_t>(mod_l(-phase, Li))], p);
        }
        mats.push_back(FpMatrix::monomial(p, col, val));
        inv_mats.push_back(FpMatrix::monomial(p, icol, ival));
        cols.push_back(std::move(col));
        vals.push_back(std::move(val));
        inv_cols.push_back(std::move(icol));
        inv_vals.push_back(std::move(ival));
    }
}

WeylAssignment weyl_assignment(const CommPtr& lambda, u64 p, unsigned L, u64 zeta, std::mt19937_64& rng)
{
    SkewNormalForm nf = skew_normal_form(*lambda);
    WeylAssignment w;
    w.comm = lambda;
    w.p = p;
    w.L = L;
    w.zeta = zeta;
    w.d = nf.d;
    const int n = lambda->size();
    for (int a = 0; a < n; ++a) {
        std::vector<i64> e;
        for (int t = 0; t < nf.blocks(); ++t) {
            e.push_back(nf.c(2 * t, a));
            e.push_back(nf.c(2 * t + 1, a));
        }
        w.exps.push_back(std::move(e));
        w.scalars.push_back(random_nonzero(p, rng));
    }
    w.build();
    return w;
}

bool verify_assignment(const WeylAssignment& w, int samples, std::mt19937_64& rng)
{
    const int n = w.comm->size();
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
    }
    if (samples > 0 && static_cast<std::size_t>(samples) < pairs.size()) {
        std::shuffle(pairs.begin(), pairs.end(), rng);
        pairs.resize(static_cast<std::size_t>(samples));
    }
    for (auto [a, b] : pairs) {
        const auto& A = w.mats[static_cast<std::size_t>(a)];
        const auto& B = w.mats[static_cast<std::size_t>(b)];
        u64 z = powmod(w.zeta, static_cast<u64>(mod_l(w.comm->lambda(a, b), w.L)), w.p);
        if (!(A * B == (B * A).scaled(z))) return false;
    }
    return true;
}

WeylEvaluator::WeylEvaluator(const WeylAssignment& w, const CommPtr& expr_comm) : w_(w)
{
    local_.assign(static_cast<std::size_t>(expr_comm->size()), -1);
    for (int a = 0; a < expr_comm->size(); ++a) {
        if (w.comm->contains(expr_comm->name(a))) local_[static_cast<std::size_t>(a)] = w.comm->index(expr_comm->name(a));
    }
}

u64 WeylEvaluator::zeta_pow(i64 k) const { return powmod(w_.zeta, static_cast<u64>(mod_l(k, w_.L)), w_.p); }

u64 WeylEvaluator::eps_value(const EpsScalar& s) const
{
    u64 r = 0;
    for (auto [e, c] : s.terms()) {
        u64 cc = Fp::from_int(c, w_.p).v;
        r = add_mod(r, mulmod(cc, zeta_pow(e), w_.p), w_.p);
    }
    return r;
}

FpMatrix WeylEvaluator::poly_matrix(const NCLaurent& poly)
{
    const u64 p = w_.p;
    FpMatrix acc = FpMatrix::zero(w_.dim, p);
    Mono id;
    id.col.resize(static_cast<std::size_t>(w_.dim));
    std::iota(id.col.begin(), id.col.end(), 0);
    id.val.assign(static_cast<std::size_t>(w_.dim), 1);
    for (auto& [ex, c] : poly.terms()) {
        Mono m = id;
        for (std::size_t a = 0; a < ex.size(); ++a) {
            if (!ex[a]) continue;
            int la = local_[a];
            if (la < 0) throw std::invalid_argument("generator without assigned matrix");
            auto ula = static_cast<std::size_t>(la);
            Mono gm{ex[a] > 0 ? w_.cols[ula] : w_.inv_cols[ula], ex[a] > 0 ? w_.vals[ula] : w_.inv_vals[ula]};
            for (int k = 0; k < std::abs(ex[a]); ++k) m = mono_mul(m, gm, p);
        }
        u64 cv = eps_value(c);
        for (auto& v : m.val) v = mulmod(v, cv, p);
        acc = acc + FpMatrix::monomial(p, m.col, m.val);
    }
    return acc;
}

FpMatrix WeylEvaluator::matrix(const SkewExpr& e)
{
    auto it = memo_.find(e.id());
    if (it != memo_.end()) return it->second.second;
    const auto& n = e.node();
    FpMatrix r;
    switch (n.kind) {
    case SkewExpr::Kind::Gen: {
        int la = local_[static_cast<std::size_t>(n.value)];
        if (la < 0) throw std::invalid_argument("generator without assigned matrix");
        r = w_.mats[static_cast<std::size_t>(la)];
        break;
    }
    case SkewExpr::Kind::Eps:
        r = FpMatrix::identity(w_.dim, w_.p, zeta_pow(n.value));
        break;
    case SkewExpr::Kind::Poly:
        r = poly_matrix(n.poly);
        break;
    case SkewExpr::Kind::Add:
        r = matrix(n.kids.front());
        for (std::size_t k = 1; k < n.kids.size(); ++k) r = r + matrix(n.kids[k]);
        break;
    case SkewExpr::Kind::Mul:
        r = matrix(n.kids.front());
        for (std::size_t k = 1; k < n.kids.size(); ++k) r = r * matrix(n.kids[k]);
        break;
    case SkewExpr::Kind::Inv:
        try {
            r = matrix(n.kids.front()).inverse();
        } catch (const SingularMatrix&) {
            throw SingularInversion("singular matrix at an inversion node");
        }
        break;
    }
    memo_.emplace(e.id(), std::make_pair(e, r));
    return r;
}

FpVec WeylEvaluator::apply(const SkewExpr& e, const FpVec& v)
{
    auto it = memo_.find(e.id());
    if (it != memo_.end()) return it->second.second.apply(v);
    const auto& n = e.node();
    switch (n.kind) {
    case SkewExpr::Kind::Add: {
        FpVec r(v.size(), 0);
        for (auto& k : n.kids) {
            FpVec t = apply(k, v);
            for (std::size_t i = 0; i < r.size(); ++i) r[i] = add_mod(r[i], t[i], w_.p);
        }
        return r;
    }
    case SkewExpr::Kind::Mul: {
        FpVec r = v;
        for (std::size_t k = n.kids.size(); k-- > 0;) r = apply(n.kids[k], r);
        return r;
    }
    default:
        return matrix(e).apply(v);
    }
}

std::string Witness::to_json() const
{
    nlohmann::json j;
    j["generators"] = generators;
    j["lambda"] = lambda;
    j["p"] = p;
    j["L"] = L;
    j["zeta"] = zeta;
    j["d"] = d;
    j["exponents"] = exps;
    j["scalars"] = scalars;
    j["vector_seed"] = vector_seed;
    return j.dump();
}

Witness Witness::from_json(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    Witness w;
    w.generators = j.at("generators").get<std::vector<std::string>>();
    w.lambda = j.at("lambda").get<std::vector<int>>();
    w.p = j.at("p").get<u64>();
    w.L = j.at("L").get<unsigned>();
    w.zeta = j.at("zeta").get<u64>();
    w.d = j.at("d").get<std::vector<i64>>();
    w.exps = j.at("exponents").get<std::vector<std::vector<i64>>>();
    w.scalars = j.at("scalars").get<std::vector<u64>>();
    w.vector_seed = j.at("vector_seed").get<u64>();
    return w;
}

std::string Verdict::kind_name() const
{
    switch (kind) {
    case Kind::ProbablyEqual: return "ProbablyEqual";
    case Kind::NotEqual: return "NotEqual";
    case Kind::ExhaustedRetries: return "ExhaustedRetries";
    }
    return "?";
}

std::vector<unsigned> plan_root_orders(const OracleConfig& cfg, int k, const std::vector<i64>& d)
{
    auto fits = [&](unsigned L) {
        if (L < 2) return false;
        for (i64 x : d) {
            if (std::gcd(static_cast<i64>(L), std::llabs(x)) != 1) return false;
        }
        double dim = 1;
        for (int t = 0; t < k; ++t) dim *= L;
        return dim <= static_cast<double>(cfg.max_dim);
    };
    std::vector<unsigned> out;
    for (unsigned L : cfg.root_orders) {
        if (fits(L) && std::find(out.begin(), out.end(), L) == out.end()) out.push_back(L);
    }
    const std::size_t want = std::min<std::size_t>(3, std::max<std::size_t>(1, cfg.root_orders.size()));
    // Fallback: smallest unused orders, odd ones first.
    for (int pass = 0; pass < 2 && out.size() < want; ++pass) {
        for (unsigned L = 3; L <= 64 && out.size() < want; ++L) {
            if ((L % 2 == 1) != (pass == 0)) continue;
            if (fits(L) && std::find(out.begin(), out.end(), L) == out.end()) out.push_back(L);
        }
    }
    if (out.empty()) throw std::invalid_argument("no admissible root order for this dimension bound");
    return out;
}

namespace {

FpVec random_vector(int dim, u64 p, u64 seed)
{
    std::mt19937_64 rng(seed);
    FpVec v(static_cast<std::size_t>(dim));
    for (auto& x : v) x = rng() % p;
    return v;
}

// Index of the first pair whose difference is nonzero on v, or -1.
int first_difference(const std::vector<std::pair<SkewExpr, SkewExpr>>& pairs, const WeylAssignment& w, u64 vector_seed)
{
    WeylEvaluator ev(w, pairs.front().first.comm());
    FpVec v = random_vector(w.dim, w.p, vector_seed);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        FpVec x = ev.apply(pairs[i].first, v);
        FpVec y = ev.apply(pairs[i].second, v);
        if (x != y) return static_cast<int>(i);
    }
    return -1;
}

Witness make_witness(const WeylAssignment& w, u64 vector_seed)
{
    Witness r;
    r.generators = w.comm->names();
    r.lambda = w.comm->matrix();
    r.p = w.p;
    r.L = w.L;
    r.zeta = w.zeta;
    r.d = w.d;
    r.exps = w.exps;
    r.scalars = w.scalars;
    r.vector_seed = vector_seed;
    return r;
}

struct TrialResult {
    enum class Kind { Zero, Nonzero, Exhausted } kind = Kind::Zero;
    int pair = -1;
    int retries = 0;
    Witness witness;
};

TrialResult run_trial(const std::vector<std::pair<SkewExpr, SkewExpr>>& pairs, const CommPtr& local, unsigned L, const OracleConfig& cfg, int t)
{
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32), static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    u64 p = random_prime_with_root(cfg.prime_bits, L, rng);
    u64 zeta = primitive_root_of_unity(p, L, rng);
    TrialResult res;
    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        WeylAssignment w = weyl_assignment(local, p, L, zeta, rng);
        if (!verify_assignment(w, 20, rng)) throw std::logic_error("Weyl assignment violates the commutation relations");
        u64 vs = rng();
        try {
            int i = first_difference(pairs, w, vs);
            if (i >= 0) {
                res.kind = TrialResult::Kind::Nonzero;
                res.pair = i;
                res.witness = make_witness(w, vs);
            }
            return res;
        } catch (const SingularInversion&) {
            res.retries = attempt + 1;
        }
    }
    res.kind = TrialResult::Kind::Exhausted;
    return res;
}

}  // namespace

Verdict equal_skew_all(const std::vector<std::pair<SkewExpr, SkewExpr>>& pairs, const OracleConfig& cfg)
{
    if (pairs.empty()) throw std::invalid_argument("no identities to compare");
    const CommPtr comm = pairs.front().first.comm();
    std::set<int> supp;
    for (auto& [a, b] : pairs) {
        if (a.comm() != comm && !(*a.comm() == *comm)) throw RegistryMismatch("identities over different registries");
        if (b.comm() != comm && !(*b.comm() == *comm)) throw RegistryMismatch("identities over different registries");
        for (int g : a.support()) supp.insert(g);
        for (int g : b.support()) supp.insert(g);
    }
    std::vector<int> keep;
    if (cfg.restrict_support) keep.assign(supp.begin(), supp.end());
    else {
        keep.resize(static_cast<std::size_t>(comm->size()));
        std::iota(keep.begin(), keep.end(), 0);
    }
    CommPtr local = comm->restricted(keep);
    SkewNormalForm nf = skew_normal_form(*local);

    Verdict v;
    v.root_orders = plan_root_orders(cfg, nf.blocks(), nf.d);
    v.dimension_blocks = nf.blocks();
    v.trials = cfg.trials;

    std::vector<TrialResult> results(static_cast<std::size_t>(cfg.trials));
    auto L_of = [&](int t) { return v.root_orders[static_cast<std::size_t>(t) % v.root_orders.size()]; };
    if (cfg.workers <= 1) {
        for (int t = 0; t < cfg.trials; ++t) results[static_cast<std::size_t>(t)] = run_trial(pairs, local, L_of(t), cfg, t);
    } else {
        for (int start = 0; start < cfg.trials; start += cfg.workers) {
            std::vector<std::future<TrialResult>> fut;
            for (int t = start; t < std::min(cfg.trials, start + cfg.workers); ++t) {
                fut.push_back(std::async(std::launch::async, [&, t] { return run_trial(pairs, local, L_of(t), cfg, t); }));
            }
            for (std::size_t k = 0; k < fut.size(); ++k) results[static_cast<std::size_t>(start) + k] = fut[k].get();
        }
    }
    for (auto& r : results) {
        v.retries += r.retries;
        if (r.kind == TrialResult::Kind::Nonzero) {
            v.kind = Verdict::Kind::NotEqual;
            v.witness = r.witness;
            v.failing_pair = r.pair;
            return v;
        }
    }
    for (auto& r : results) {
        if (r.kind == TrialResult::Kind::Exhausted) v.kind = Verdict::Kind::ExhaustedRetries;
    }
    return v;
}

Verdict equal_skew(const SkewExpr& a, const SkewExpr& b, const OracleConfig& cfg) { return equal_skew_all({{a, b}}, cfg); }

bool replay_witness(const SkewExpr& a, const SkewExpr& b, const Witness& wit)
{
    WeylAssignment w;
    w.comm = std::make_shared<const CommutationMatrix>(wit.generators, wit.lambda);
    w.p = wit.p;
    w.L = wit.L;
    w.zeta = wit.zeta;
    w.d = wit.d;
    w.exps = wit.exps;
    w.scalars = wit.scalars;
    w.build();
    return first_difference({{a, b}}, w, wit.vector_seed) == 0;
}

}  // namespace clr
