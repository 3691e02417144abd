#include "doctest.h"

#include <random>
#include <set>

#include "clr/quiver.hpp"

using namespace clr;

namespace {

ExchangeMatrix three_cycle()
{
    std::vector<Vertex> v = {Vertex::grid(0, 1), Vertex::grid(0, 2), Vertex::grid(0, 3)};
    ExchangeMatrix b(v, {false, false, false});
    b.add_arrows(v[0], v[1]);
    b.add_arrows(v[1], v[2]);
    b.add_arrows(v[2], v[0]);
    return b;
}

ExchangeMatrix random_matrix(std::mt19937_64& rng, int n)
{
    std::vector<Vertex> v;
    for (int i = 1; i <= n; ++i) v.push_back(Vertex::grid(0, i));
    ExchangeMatrix b(v, std::vector<bool>(static_cast<std::size_t>(n), false));
    std::uniform_int_distribution<int> d(-2, 2);
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            int c = d(rng);
            if (c > 0) b.add_arrows(u, w, c);
            if (c < 0) b.add_arrows(w, u, -c);
        }
    }
    return b;
}

std::set<Vertex> out_neighbors(const ExchangeMatrix& q, Vertex v)
{
    std::set<Vertex> r;
    for (int u = 0; u < q.size(); ++u) {
        if (q.b(q.index(v), u) > 0) r.insert(q.label(u));
    }
    return r;
}

std::set<Vertex> in_neighbors(const ExchangeMatrix& q, Vertex v)
{
    std::set<Vertex> r;
    for (int u = 0; u < q.size(); ++u) {
        if (q.b(u, q.index(v)) > 0) r.insert(q.label(u));
    }
    return r;
}

}  // namespace

TEST_CASE("3-cycle mutation")
{
    ExchangeMatrix b = three_cycle().mutate(Vertex::grid(0, 2));
    auto a = sorted_arrows(b);
    REQUIRE(a.size() == 2);
    CHECK(a[0].from == Vertex::grid(0, 2));
    CHECK(a[0].to == Vertex::grid(0, 1));
    CHECK(a[1].from == Vertex::grid(0, 3));
    CHECK(a[1].to == Vertex::grid(0, 2));
    CHECK(b.mutate(Vertex::grid(0, 2)) == three_cycle());
}

TEST_CASE("mutation is involutive and commutes on disconnected vertices")
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        ExchangeMatrix b = random_matrix(rng, 5);
        for (int k = 0; k < 5; ++k) CHECK(b.mutate(k).mutate(k) == b);
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                if (b.b(i, j) == 0) CHECK(b.mutate(i).mutate(j) == b.mutate(j).mutate(i));
            }
        }
    }
}

TEST_CASE("bare matrix mutation agrees with labelled mutation")
{
    std::mt19937_64 rng(9);
    ExchangeMatrix b = random_matrix(rng, 4);
    std::vector<int> raw(16);
    for (int u = 0; u < 4; ++u) {
        for (int v = 0; v < 4; ++v) raw[static_cast<std::size_t>(u * 4 + v)] = b.b(u, v);
    }
    auto m = mutate_matrix(raw, 4, 2);
    auto c = b.mutate(2);
    for (int u = 0; u < 4; ++u) {
        for (int v = 0; v < 4; ++v) CHECK(m[static_cast<std::size_t>(u * 4 + v)] == c.b(u, v));
    }
}

TEST_CASE("frozen vertices cannot be mutated")
{
    auto q = build_Q_tilde(3, 1);
    for (int k = 0; k < q.size(); ++k) {
        if (q.is_frozen(k)) CHECK_THROWS_AS(q.mutate(k), FrozenVertexError);
    }
}

TEST_CASE("local arrow pattern of Q_{4,m}")
{
    const int n = 4;
    for (int m : {2, 3}) {
        auto q = build_Q(n, m);
        CHECK(q.size() == n * (m + 1));
        for (int u = 0; u < q.size(); ++u) {
            for (int v = 0; v < q.size(); ++v) CHECK(q.b(u, v) == -q.b(v, u));
        }
        for (int j = 1; j < m; ++j) {
            for (int i = 1; i <= n; ++i) {
                auto g = [&](int jj, int ii) { return Vertex::grid(jj, wrap(ii, n)); };
                CHECK(out_neighbors(q, g(j, i)) == std::set<Vertex>{g(j, i + 1), g(j - 1, i), g(j + 1, i - 1)});
                CHECK(in_neighbors(q, g(j, i)) == std::set<Vertex>{g(j, i - 1), g(j - 1, i + 1), g(j + 1, i)});
            }
        }
    }
    CHECK_THROWS(build_Q(1, 2));
    CHECK_THROWS(build_Q(3, 0));
}

TEST_CASE("enriched quivers")
{
    for (int n : {3, 4}) {
        for (int m : {2, 3}) {
            auto q = build_Q(n, m);
            auto qt = build_Q_tilde(n, m);
            std::vector<Vertex> grid;
            int frozen = 0;
            for (int k = 0; k < qt.size(); ++k) {
                if (qt.is_frozen(k)) {
                    ++frozen;
                    Vertex v = qt.label(k);
                    CHECK(in_neighbors(qt, v) == std::set<Vertex>{v.head()});
                    CHECK(out_neighbors(qt, v) == std::set<Vertex>{v.tail()});
                } else {
                    grid.push_back(qt.label(k));
                }
            }
            CHECK(frozen == static_cast<int>(q.arrows().size()));
            CHECK(qt.restricted(grid) == q);

            auto qp = build_Q_tilde_prime(n, m);
            for (int k = 0; k < qp.size(); ++k) {
                if (!qp.is_frozen(k)) continue;
                Vertex v = qp.label(k);
                CHECK(v.tj == v.j + 1);
                CHECK(v.ti == wrap(v.i - 1, n));
            }
        }
    }
    // Q~'_{n,2}: frozen X_{(i+1)^-, i} and X_{i, (i-1)^+} only.
    auto qp = build_Q_tilde_prime(4, 1);
    int frozen = 0;
    for (int k = 0; k < qp.size(); ++k) frozen += qp.is_frozen(k);
    CHECK(frozen == 4);
}

TEST_CASE("permutations relabel")
{
    auto q = build_Q(3, 2);
    auto s = VertexPermutation::transposition(Vertex::grid(1, 2), Vertex::grid(1, 3));
    CHECK(s.is_bijection());
    auto p = q.permuted(s);
    CHECK(p.b(Vertex::grid(1, 3), Vertex::grid(1, 1)) == q.b(Vertex::grid(1, 2), Vertex::grid(1, 1)));
    CHECK(p.permuted(s) == q);
    CHECK(s.then(s).is_identity());
}

TEST_CASE("export text")
{
    auto t = three_cycle().export_text();
    CHECK(t == "0:1 -> 0:2\n0:2 -> 0:3\n0:3 -> 0:1\n");
    CHECK(Vertex::parse("2:3>3:2") == Vertex::arrow(Vertex::grid(2, 3), Vertex::grid(3, 2)));
    CHECK(Vertex::parse(Vertex::grid(1, 4).str()) == Vertex::grid(1, 4));
}

TEST_CASE("structural lemmas for A_i match direct mutation")
{
    for (int n : {3, 4, 5}) {
        auto q = build_Q(n, 2);
        CHECK(structural_oracle_Ai(n, 0) == sorted_arrows(q));
        for (int i = 1; i <= n - 2; ++i) {
            q = q.mutate(Vertex::grid(1, i));
            CAPTURE(n);
            CAPTURE(i);
            CHECK(structural_oracle_Ai(n, i) == sorted_arrows(q));
        }
        // B(Q') = Q' where B = mu_{n-1}, mu_n, then s_{n-1,n}.
        auto b = q.mutate(Vertex::grid(1, n - 1)).mutate(Vertex::grid(1, n));
        b = b.permuted(VertexPermutation::transposition(Vertex::grid(1, n - 1), Vertex::grid(1, n)));
        CHECK(b == q);
    }
}
