#include "doctest.h"

#include <algorithm>
#include <random>

#include "clr/qtorus.hpp"

using namespace clr;

namespace {

NCLaurent gen(const CommPtr& c, const std::string& name, int k = 1) { return NCLaurent::generator(c, name, k); }

std::string P(int i, int n) { return "p" + std::to_string(wrap(i, n)); }
std::string Q(int i, int n) { return "q" + std::to_string(wrap(i, n)); }

// Bubble-sort a word of generators into registry order, one adjacent swap at a time.
NCMonomial bubble_normalize(const CommutationMatrix& c, std::vector<int> w)
{
    int e = 0;
    for (std::size_t pass = 0; pass < w.size(); ++pass) {
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] > w[k + 1]) {
                e += c.lambda(w[k], w[k + 1]);
                std::swap(w[k], w[k + 1]);
            }
        }
    }
    Exponent ex(static_cast<std::size_t>(c.size()), 0);
    for (int a : w) ++ex[static_cast<std::size_t>(a)];
    return {e, ex};
}

NCLaurent random_poly(const CommPtr& c, std::mt19937_64& rng, int terms)
{
    NCLaurent r(c);
    for (int t = 0; t < terms; ++t) {
        Exponent e(static_cast<std::size_t>(c->size()));
        for (auto& x : e) x = static_cast<int>(rng() % 5) - 2;
        r.add_term(e, EpsScalar::eps_pow(static_cast<int>(rng() % 5) - 2, static_cast<std::int64_t>(rng() % 7) - 3));
    }
    return r;
}

}  // namespace

TEST_CASE("p,q commutation data")
{
    for (int n : {3, 4, 5}) {
        auto c = lambda_pq(n);
        for (int i = 1; i <= n; ++i) {
            CHECK(c->lambda(c->index(P(i, n)), c->index(Q(i, n))) == 1);
            CHECK(c->lambda(c->index(P(i, n)), c->index(Q(i - 1, n))) == -2);
            CHECK(c->lambda(c->index(P(i, n)), c->index(Q(i - 2, n))) == 1);
            CHECK(c->lambda(c->index(P(i, n)), c->index(P(i - 1, n))) == 1);
            CHECK(c->lambda(c->index(Q(i, n)), c->index(Q(i + 1, n))) == -1);
            // Shift invariance.
            for (int a = 1; a <= n; ++a) {
                CHECK(c->lambda(c->index(P(i, n)), c->index(Q(a, n))) ==
                      c->lambda(c->index(P(i + 1, n)), c->index(Q(a + 1, n))));
                CHECK(c->lambda(c->index(Q(i, n)), c->index(Q(a, n))) ==
                      c->lambda(c->index(Q(i + 1, n)), c->index(Q(a + 1, n))));
            }
        }
        auto pi = gen(c, "p1"), qi = gen(c, "q1");
        CHECK(pi * qi == (qi * pi).scaled(EpsScalar::eps_pow(1)));
    }
}

TEST_CASE("snake commutation data")
{
    for (int n : {3, 4, 5}) {
        const int m = 4;
        auto s = lambda_snake(n, m);
        auto pq = lambda_pq(n);
        for (int j = 1; j < m; ++j) {
            std::vector<int> keep = snake_column(*s, n, j);
            auto next = snake_column(*s, n, j + 1);
            keep.insert(keep.end(), next.begin(), next.end());
            CHECK(s->restricted(keep)->matrix() == pq->matrix());
        }
        // Same snake path: q_{1,i} and q_{2,i-1}.
        CHECK(s->lambda(s->index(snake_name(1, 2)), s->index(snake_name(2, 1))) == -2);
        CHECK(s->lambda(s->index(snake_name(2, 1)), s->index(snake_name(1, 2))) == 2);
        int nonadjacent = 0;
        for (int a = 0; a < s->size(); ++a) {
            for (int b = 0; b < s->size(); ++b) {
                int ka = 0, kb = 0;
                for (int j = 1; j <= m; ++j) {
                    for (int i = 1; i <= n; ++i) {
                        if (s->index(snake_name(j, i)) == a) ka = wrap(i + j - 1, n);
                        if (s->index(snake_name(j, i)) == b) kb = wrap(i + j - 1, n);
                    }
                }
                int d = wrap(ka - kb, n);
                if (d != n && d != 1 && d != n - 1) {
                    CHECK(s->lambda(a, b) == 0);
                    ++nonadjacent;
                }
            }
        }
        CHECK((n == 3 || nonadjacent > 0));
    }
}

TEST_CASE("y commutation data")
{
    auto q = build_Q(4, 3);
    auto c = lambda_y(q);
    for (int v = 0; v < q.size(); ++v) {
        for (int u = 0; u < q.size(); ++u) CHECK(c->lambda(u, v) == 2 * q.b(v, u));
    }
    auto y = [&](int j, int i) { return c->index("y" + Vertex::grid(j, wrap(i, 4)).str()); };
    for (int j = 0; j < 3; ++j) {
        for (int i = 1; i <= 4; ++i) {
            CHECK(c->lambda(y(j, i), y(j + 1, i)) == 2);
            CHECK(c->lambda(y(j, i), y(j, i + 1)) == -2);
        }
    }
}

TEST_CASE("normal ordering")
{
    std::mt19937_64 rng(11);
    auto c = lambda_snake(4, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> w(1 + rng() % 8);
        for (auto& a : w) a = static_cast<int>(rng() % static_cast<unsigned>(c->size()));
        std::vector<std::pair<int, int>> f;
        NCLaurent prod = NCLaurent::constant(c, EpsScalar(1));
        for (int a : w) {
            f.push_back({a, 1});
            prod = prod * NCLaurent::generator(c, a);
        }
        auto expect = NCLaurent::monomial(c, bubble_normalize(*c, w));
        CHECK(NCLaurent::word(c, f) == expect);
        CHECK(prod == expect);
    }
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_poly(c, rng, 5), b = random_poly(c, rng, 5), d = random_poly(c, rng, 5);
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
    }
    // Inverses of monomials.
    for (int trial = 0; trial < 20; ++trial) {
        NCMonomial m{static_cast<int>(rng() % 5) - 2, Exponent(static_cast<std::size_t>(c->size()))};
        for (auto& x : m.e) x = static_cast<int>(rng() % 5) - 2;
        auto prod = mono_mul(*c, m, mono_inverse(*c, m));
        CHECK(prod.eps == 0);
        CHECK(std::all_of(prod.e.begin(), prod.e.end(), [](int x) { return x == 0; }));
    }
    CHECK_THROWS_AS(gen(c, snake_name(1, 1)) + gen(lambda_pq(4), "p1"), RegistryMismatch);
}

TEST_CASE("central products")
{
    for (int n : {3, 4, 5}) {
        auto c = lambda_pq(n);
        std::vector<std::pair<int, int>> pw, qw;
        for (int i = 1; i <= n; ++i) {
            pw.push_back({c->index(P(i, n)), 1});
            qw.push_back({c->index(Q(i, n)), 1});
        }
        auto pp = NCLaurent::word(c, pw), qq = NCLaurent::word(c, qw);
        for (int a = 0; a < c->size(); ++a) {
            auto g = NCLaurent::generator(c, a);
            CHECK(pp * g == g * pp);
            CHECK(qq * g == g * qq);
        }
        auto k = kappa_eps(c, n, 1, pq_indices(*c, n, 'p'), pq_indices(*c, n, 'q'));
        CHECK(conjugate_by_monomial(k, {0, pp.terms().begin()->first}) == k);
    }
}

TEST_CASE("kappa")
{
    auto c = lambda_pq(4);
    auto p = pq_indices(*c, 4, 'p'), q = pq_indices(*c, 4, 'q');
    auto k = kappa_eps(c, 4, 1, p, q);
    auto v = make_varset(c->names());
    Poly expect = poly_var(v, "q1") * poly_var(v, "q2") * poly_var(v, "q3") +
                  poly_var(v, "p4") * poly_var(v, "q1") * poly_var(v, "q2") +
                  poly_var(v, "p3") * poly_var(v, "p4") * poly_var(v, "q1") +
                  poly_var(v, "p2") * poly_var(v, "p3") * poly_var(v, "p4");
    CHECK(k.at_eps_one(v) == expect);

    for (int n : {3, 4, 5}) {
        auto cn = lambda_pq(n);
        auto pn = pq_indices(*cn, n, 'p'), qn = pq_indices(*cn, n, 'q');
        for (int i = 1; i <= n; ++i) {
            auto ki = kappa_eps(cn, n, i, pn, qn);
            CHECK(ki.size() == static_cast<std::size_t>(n));
            for (auto& [e, coef] : ki.terms()) {
                int deg = 0;
                for (int x : e) deg += x;
                CHECK(deg == n - 1);
                CHECK(coef.is_monomial());
            }
        }
    }
}

TEST_CASE("exact kappa identities")
{
    for (int n : {3, 4}) {
        auto c = lambda_pq(n);
        auto p = pq_indices(*c, n, 'p'), q = pq_indices(*c, n, 'q');
        auto kap = [&](int i) { return kappa_eps(c, n, i, p, q); };
        auto eps = [](int k) { return EpsScalar::eps_pow(k); };
        for (int i = 1; i <= n; ++i) {
            auto pi = gen(c, P(i, n)), qi = gen(c, Q(i, n));
            CHECK(pi * qi * kap(i + 1) == (kap(i + 1) * pi * qi).scaled(eps(-1)));
            CHECK(qi * pi * kap(i) == (kap(i) * qi * pi).scaled(eps(1)));
            CHECK(gen(c, Q(i + 1, n)) * kap(i + 2) + pi * kap(i) == kap(i + 1) * (gen(c, P(i + 1, n)) + qi));
            // Every monomial of kappa_{i+1} has the same exponent against p_i q_i.
            auto pq = mono_mul(*c, {0, pi.terms().begin()->first}, {0, qi.terms().begin()->first});
            auto next = kap(i + 1);
            for (auto& t : next.terms()) CHECK(alpha_exponent(*c, pq.e, t.first) == -1);
        }
    }
}

TEST_CASE("alpha eps")
{
    auto q = build_Q(3, 2);
    auto c = lambda_y(q);
    std::vector<int> y;
    for (int i = 1; i <= 3; ++i) y.push_back(c->index("y" + Vertex::grid(1, i).str()));
    auto a = alpha_eps(c, 3, 1, y);
    auto g = [&](int i) { return NCLaurent::generator(c, y[static_cast<std::size_t>(i - 1)]); };
    auto one = NCLaurent::constant(c, EpsScalar(1));
    CHECK(a == one + g(1).scaled(EpsScalar::eps_pow(1)) + (g(1) * g(2)).scaled(EpsScalar::eps_pow(2)));

    auto q4 = build_Q(4, 2);
    auto c4 = lambda_y(q4);
    std::vector<int> y4;
    for (int i = 1; i <= 4; ++i) y4.push_back(c4->index("y" + Vertex::grid(1, i).str()));
    auto g4 = [&](int i) { return NCLaurent::generator(c4, y4[static_cast<std::size_t>(wrap(i, 4) - 1)]); };
    auto e = [](int k) { return EpsScalar::eps_pow(k); };
    for (int i = 1; i <= 4; ++i) {
        auto trunc = NCLaurent::constant(c4, EpsScalar(1)) + g4(i + 1).scaled(e(1)) + (g4(i + 1) * g4(i + 2)).scaled(e(2));
        CHECK(alpha_eps(c4, 4, i, y4) == NCLaurent::constant(c4, EpsScalar(1)) + (g4(i) * trunc).scaled(e(1)));
    }
    auto v = make_varset(c4->names());
    Poly classical = poly_const(v, 1);
    Poly run = poly_const(v, 1);
    for (int k = 1; k <= 3; ++k) {
        run *= poly_var(v, c4->name(y4[static_cast<std::size_t>(k - 1)]));
        classical += run;
    }
    CHECK(alpha_eps(c4, 4, 1, y4).at_eps_one(v) == classical);
}

TEST_CASE("conjugation and alpha exponents")
{
    auto c = lambda_pq(3);
    auto p = pq_indices(*c, 3, 'p'), q = pq_indices(*c, 3, 'q');
    auto k = kappa_eps(c, 3, 1, p, q);
    NCMonomial x{0, Exponent(6, 0)};
    x.e[static_cast<std::size_t>(p[0])] = 1;
    auto xk = conjugate_by_monomial(k, x);
    CHECK(xk.support() == k.support());
    std::vector<Exponent> ek, exk;
    for (auto& t : k.terms()) ek.push_back(t.first);
    for (auto& t : xk.terms()) exk.push_back(t.first);
    CHECK(ek == exk);
    auto X = NCLaurent::monomial(c, x), Xi = NCLaurent::monomial(c, mono_inverse(*c, x));
    CHECK(xk == X * k * Xi);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        Exponent a(6), b(6);
        for (auto& z : a) z = static_cast<int>(rng() % 7) - 3;
        for (auto& z : b) z = static_cast<int>(rng() % 7) - 3;
        CHECK(alpha_exponent(*c, a, a) == 0);
        CHECK(alpha_exponent(*c, a, b) == -alpha_exponent(*c, b, a));
        auto ab = mono_mul(*c, {0, a}, {0, b}), ba = mono_mul(*c, {0, b}, {0, a});
        CHECK(ab.e == ba.e);
        CHECK(ab.eps - ba.eps == alpha_exponent(*c, a, b));
        auto m = NCLaurent::monomial(c, {0, b});
        CHECK(conjugate_by_monomial(m, {0, a}) == m.scaled(EpsScalar::eps_pow(alpha_exponent(*c, a, b))));
    }
}

TEST_CASE("y to network substitution on alpha")
{
    // y_{j,i} -> eps^{-1} q_{j,i}^{-1} q_{j+1,i-1} respects commutation and sends
    // alpha_{i+1}(M_j) to a monomial times kappa_i(q_j, q_{j+1}).
    for (int n : {3, 4}) {
        const int m = 4;
        auto s = lambda_snake(n, m);
        auto qy = build_Q(n, m);
        auto cy = lambda_y(qy);
        auto phi = [&](int j, int i) {
            return NCLaurent::word(s, {{s->index(snake_name(j, wrap(i, n))), -1}, {s->index(snake_name(j + 1, wrap(i - 1, n))), 1}})
                .scaled(EpsScalar::eps_pow(-1));
        };
        for (int j = 1; j < m; ++j) {
            for (int i = 1; i <= n; ++i) {
                for (int j2 = 1; j2 < m; ++j2) {
                    for (int i2 = 1; i2 <= n; ++i2) {
                        int lam = cy->lambda(cy->index("y" + Vertex::grid(j, i).str()), cy->index("y" + Vertex::grid(j2, i2).str()));
                        CHECK(phi(j, i) * phi(j2, i2) == (phi(j2, i2) * phi(j, i)).scaled(EpsScalar::eps_pow(lam)));
                    }
                }
            }
        }
        for (int j = 1; j < m; ++j) {
            auto qm = snake_column(*s, n, j), qq = snake_column(*s, n, j + 1);
            for (int i = 1; i <= n; ++i) {
                NCLaurent a = NCLaurent::constant(s, EpsScalar(1));
                NCLaurent run = NCLaurent::constant(s, EpsScalar(1));
                for (int k = 1; k <= n - 1; ++k) {
                    run = run * phi(j, i + k);
                    a += run.scaled(EpsScalar::eps_pow(k));
                }
                std::vector<std::pair<int, int>> w;
                for (int k = 1; k <= n - 1; ++k) w.push_back({qm[static_cast<std::size_t>(wrap(i - k, n) - 1)], 1});
                CHECK(NCLaurent::word(s, w) * a == kappa_eps(s, n, i, qm, qq));
            }
        }
    }
}
