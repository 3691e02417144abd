#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "clr/oracle.hpp"

using namespace clr;

namespace {

constexpr std::uint64_t kP = 2305843009213693951ULL;  // 2^61 - 1

FpMatrix random_dense(int n, std::mt19937_64& rng)
{
    FpVec a(static_cast<std::size_t>(n * n));
    for (auto& x : a) x = rng() % kP;
    return FpMatrix::dense_from(n, kP, a);
}

FpMatrix random_sparse(int n, std::mt19937_64& rng)
{
    FpMatrix r = FpMatrix::zero(n, kP);
    for (int k = 0; k < 3; ++k) {
        std::vector<int> col(static_cast<std::size_t>(n));
        FpVec val(static_cast<std::size_t>(n));
        std::iota(col.begin(), col.end(), 0);
        std::shuffle(col.begin(), col.end(), rng);
        for (auto& x : val) x = 1 + rng() % (kP - 1);
        r = r + FpMatrix::monomial(kP, col, val);
    }
    return r;
}

SkewExpr G(const CommPtr& c, const std::string& n) { return SkewExpr::gen(c, n); }

SkewExpr kappa_expr(const CommPtr& c, int n, int i)
{
    return SkewExpr::poly(kappa_eps(c, n, i, pq_indices(*c, n, 'p'), pq_indices(*c, n, 'q')));
}

std::string P(int i, int n) { return "p" + std::to_string(wrap(i, n)); }
std::string Q(int i, int n) { return "q" + std::to_string(wrap(i, n)); }

}  // namespace

TEST_CASE("finite field matrices")
{
    std::mt19937_64 rng(3);
    for (int n : {1, 7, 30}) {
        auto a = random_dense(n, rng);
        auto s = random_sparse(n, rng);
        auto id = FpMatrix::identity(n, kP);
        CHECK(a * a.inverse() == id);
        CHECK(s.inverse() * s == id);
        CHECK(s * s == s.to_dense() * s.to_dense());
        CHECK(a * s == a * s.to_dense());
        CHECK(s * a == s.to_dense() * a);
        CHECK(s + a == s.to_dense() + a);
        CHECK((a * s) * a == a * (s * a));
        FpVec v(static_cast<std::size_t>(n));
        for (auto& x : v) x = rng() % kP;
        CHECK((a * s).apply(v) == a.apply(s.apply(v)));
    }
    CHECK_THROWS_AS(FpMatrix::zero(4, kP).inverse(), SingularMatrix);
    std::vector<int> col{0, 0, 2};
    CHECK_THROWS_AS(FpMatrix::monomial(kP, col, {1, 2, 3}).inverse(), SingularMatrix);
}

TEST_CASE("skew normal form")
{
    auto two = std::make_shared<const CommutationMatrix>(std::vector<std::string>{"a", "b"}, std::vector<int>{0, 1, -1, 0});
    auto nf = skew_normal_form(*two);
    CHECK(nf.d == std::vector<std::int64_t>{1});
    CHECK(nf.C == std::vector<std::int64_t>{1, 0, 0, 1});

    auto zero = std::make_shared<const CommutationMatrix>(std::vector<std::string>{"a", "b", "c"}, std::vector<int>(9, 0));
    CHECK(skew_normal_form(*zero).blocks() == 0);

    auto as64 = [](const CommutationMatrix& c) { return std::vector<std::int64_t>(c.matrix().begin(), c.matrix().end()); };
    auto snake = lambda_snake(3, 3);
    auto s = skew_normal_form(*snake);
    CHECK(s.reconstruct() == as64(*snake));
    CHECK(s.blocks() == 3);
    CHECK(skew_normal_form(*lambda_pq(3)).blocks() == 2);
    CHECK(skew_normal_form(*lambda_y(build_Q(3, 3))).reconstruct() == as64(*lambda_y(build_Q(3, 3))));

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::vector<int> lam(static_cast<std::size_t>(n * n), 0);
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) {
            names.push_back("g" + std::to_string(i));
            for (int j = i + 1; j < n; ++j) {
                int v = static_cast<int>(rng() % 9) - 4;
                lam[static_cast<std::size_t>(i * n + j)] = v;
                lam[static_cast<std::size_t>(j * n + i)] = -v;
            }
        }
        CommutationMatrix c(names, lam);
        CHECK(skew_normal_form(c).reconstruct() == as64(c));
    }
}

TEST_CASE("Weyl assignments")
{
    std::mt19937_64 rng(21);
    auto two = std::make_shared<const CommutationMatrix>(std::vector<std::string>{"U", "V"}, std::vector<int>{0, 1, -1, 0});
    std::uint64_t p = random_prime_with_root(61, 5, rng);
    std::uint64_t z = primitive_root_of_unity(p, 5, rng);
    auto w = weyl_assignment(two, p, 5, z, rng);
    CHECK(w.dim == 5);
    CHECK(w.mats[0] * w.mats[1] == (w.mats[1] * w.mats[0]).scaled(z));
    CHECK(w.mats[0] * w.inv_mats[0] == FpMatrix::identity(5, p));

    auto comm = std::make_shared<const CommutationMatrix>(std::vector<std::string>{"a", "b"}, std::vector<int>(4, 0));
    auto wc = weyl_assignment(comm, p, 5, z, rng);
    CHECK(wc.mats[0] * wc.mats[1] == wc.mats[1] * wc.mats[0]);

    std::uint64_t p7 = random_prime_with_root(61, 7, rng);
    auto w7 = weyl_assignment(lambda_pq(3), p7, 7, primitive_root_of_unity(p7, 7, rng), rng);
    CHECK(w7.dim == 49);
    CHECK(verify_assignment(w7, 0, rng));

    std::uint64_t p3 = random_prime_with_root(61, 3, rng);
    auto ws = weyl_assignment(lambda_snake(3, 3), p3, 3, primitive_root_of_unity(p3, 3, rng), rng);
    CHECK(verify_assignment(ws, 0, rng));
    auto wy = weyl_assignment(lambda_y(build_Q(3, 2)), p7, 7, primitive_root_of_unity(p7, 7, rng), rng);
    CHECK(verify_assignment(wy, 0, rng));
}

TEST_CASE("evaluation")
{
    std::mt19937_64 rng(2);
    auto c = lambda_pq(3);
    std::uint64_t p = random_prime_with_root(61, 7, rng);
    auto w = weyl_assignment(c, p, 7, primitive_root_of_unity(p, 7, rng), rng);
    WeylEvaluator ev(w, c);

    auto k = kappa_eps(c, 3, 1, pq_indices(*c, 3, 'p'), pq_indices(*c, 3, 'q'));
    // Expanded Add/Mul form of the same polynomial.
    std::vector<SkewExpr> terms;
    for (auto& [e, coef] : k.terms()) {
        std::vector<SkewExpr> f{SkewExpr::eps_pow(c, coef.terms().front().first)};
        for (std::size_t a = 0; a < e.size(); ++a) {
            if (e[a]) f.push_back(SkewExpr::gen(c, static_cast<int>(a)).pow(e[a]));
        }
        terms.push_back(SkewExpr::product(f));
    }
    auto K = SkewExpr::poly(k);
    CHECK(ev.matrix(K) == ev.matrix(SkewExpr::sum(terms)));
    CHECK(ev.matrix(K.inv() * K) == FpMatrix::identity(w.dim, p));
    auto x = G(c, "p1") * G(c, "q2").inv() + SkewExpr::constant(c, 3);
    CHECK(ev.matrix(x.inv() * x) == FpMatrix::identity(w.dim, p));

    int invertible = 0;
    for (int t = 0; t < 10; ++t) {
        auto wt = weyl_assignment(c, p, 7, w.zeta, rng);
        WeylEvaluator et(wt, c);
        try {
            et.matrix(K.inv());
            ++invertible;
        } catch (const SingularInversion&) {
        }
    }
    CHECK(invertible >= 9);
}

TEST_CASE("randomized equality")
{
    auto c = lambda_pq(3);
    OracleConfig cfg;
    auto e = G(c, "p1") * kappa_expr(c, 3, 2).inv() + G(c, "q3");
    auto v = equal_skew(e, e, cfg);
    CHECK(v.kind == Verdict::Kind::ProbablyEqual);
    CHECK(v.root_orders.size() >= 3);

    auto pq = G(c, "p1") * G(c, "q1"), qp = G(c, "q1") * G(c, "p1");
    auto ne = equal_skew(pq, qp, cfg);
    REQUIRE(ne.kind == Verdict::Kind::NotEqual);
    REQUIRE(ne.witness);
    CHECK(replay_witness(pq, qp, *ne.witness));
    auto round = Witness::from_json(ne.witness->to_json());
    CHECK(replay_witness(pq, qp, round));
    CHECK(equal_skew(pq, SkewExpr::eps_pow(c, 1) * qp, cfg).equal());

    for (int i = 1; i <= 3; ++i) {
        auto Rp = kappa_expr(c, 3, i).inv() * G(c, Q(i, 3)) * kappa_expr(c, 3, i + 1);
        auto Rq = kappa_expr(c, 3, i + 1).inv() * G(c, P(i, 3)) * kappa_expr(c, 3, i);
        auto rhs = kappa_expr(c, 3, i).inv() * G(c, Q(i, 3)) * G(c, P(i, 3)) * kappa_expr(c, 3, i);
        CHECK(equal_skew(Rp * Rq, rhs, cfg).equal());
        CHECK_FALSE(equal_skew(Rq * Rp, rhs, cfg).equal());
    }
}

TEST_CASE("support restriction does not change verdicts")
{
    auto c = lambda_pq(3);
    OracleConfig on, off;
    off.restrict_support = false;
    std::vector<std::pair<SkewExpr, SkewExpr>> ids{
        {G(c, "p1") * G(c, "q1"), SkewExpr::eps_pow(c, 1) * G(c, "q1") * G(c, "p1")},
        {G(c, "p1") * G(c, "q1"), G(c, "q1") * G(c, "p1")},
        {G(c, "p2") * G(c, "q1"), SkewExpr::eps_pow(c, -2) * G(c, "q1") * G(c, "p2")},
        {kappa_expr(c, 3, 1).inv() * kappa_expr(c, 3, 1), SkewExpr::constant(c, 1)},
        {G(c, "q1") * G(c, "q2"), G(c, "q2") * G(c, "q1")},
    };
    for (auto& [a, b] : ids) CHECK(equal_skew(a, b, on).kind == equal_skew(a, b, off).kind);
}

TEST_CASE("classical evaluation and substitution")
{
    auto c = lambda_pq(3);
    std::mt19937_64 rng(9);
    std::uint64_t p = random_prime_with_root(61, 5, rng);
    std::vector<Fp> pt;
    for (int a = 0; a < c->size(); ++a) pt.push_back(Fp(random_nonzero(p, rng), p));
    auto k = kappa_eps(c, 3, 2, pq_indices(*c, 3, 'p'), pq_indices(*c, 3, 'q'));
    Fp sum(0, p);
    for (auto& [e, coef] : k.terms()) {
        Fp t(1, p);
        for (std::size_t a = 0; a < e.size(); ++a) t *= pt[a].pow(e[a]);
        sum += t;
    }
    CHECK(eval_classical(SkewExpr::poly(k), pt) == sum);
    CHECK_THROWS_AS(eval_classical(SkewExpr::constant(c, 0).inv(), pt), ArithmeticError);

    // Substituting p_i -> q_i, q_i -> p_i and evaluating equals evaluating at the swapped point.
    std::vector<SkewExpr> img;
    for (int i = 1; i <= 3; ++i) img.push_back(G(c, "q" + std::to_string(i)));
    for (int i = 1; i <= 3; ++i) img.push_back(G(c, "p" + std::to_string(i)));
    auto e = SkewExpr::poly(k).inv() * G(c, "p1") + SkewExpr::eps_pow(c, 2);
    std::vector<Fp> swapped(pt.begin() + 3, pt.end());
    swapped.insert(swapped.end(), pt.begin(), pt.begin() + 3);
    CHECK(eval_classical(substitute(e, img), pt) == eval_classical(e, swapped));

    std::vector<SkewExpr> ident;
    for (int a = 0; a < c->size(); ++a) ident.push_back(SkewExpr::gen(c, a));
    CHECK(equal_skew(substitute(e, ident), e, OracleConfig{}).equal());
    CHECK(structurally_equal(e, e));
    CHECK_FALSE(structurally_equal(e, substitute(e, ident)));
    CHECK(structurally_equal(G(c, "p1") * G(c, "q1"), G(c, "p1") * G(c, "q1")));
}
