#include "doctest.h"

#include <random>
#include <sstream>

#include "clr/seeds.hpp"

using namespace clr;

namespace {

// Local vertex notation around M = M_1: "3" is (1,3), "3-" is (0,3), "3+" is (2,3).
Vertex local(const std::string& t)
{
    int i = std::stoi(t);
    int j = 1;
    if (t.back() == '-') j = 0;
    if (t.back() == '+') j = 2;
    return Vertex::grid(j, i);
}

// Product of x_t for whitespace separated local tokens, and X_{a,b} for "a>b".
Poly mono(const VarSetPtr& v, const std::string& text)
{
    std::istringstream is(text);
    std::string t;
    Poly r = poly_const(v, 1);
    while (is >> t) {
        auto gt = t.find('>');
        Vertex w = gt == std::string::npos ? local(t) : Vertex::arrow(local(t.substr(0, gt)), local(t.substr(gt + 1)));
        r *= poly_var(v, xname(w));
    }
    return r;
}

Poly ymono(const VarSetPtr& v, const std::string& text)
{
    std::istringstream is(text);
    std::string t;
    Poly r = poly_const(v, 1);
    while (is >> t) r *= poly_var(v, yname(local(t)));
    return r;
}

}  // namespace

TEST_CASE("mutation words")
{
    MutationWord w;
    w.mu(Vertex::grid(1, 2)).swap(Vertex::grid(1, 3), Vertex::grid(1, 1)).mu(Vertex::grid(0, 1));
    CHECK(w.str() == "mu(1:2), swap(1:3,1:1), mu(0:1)");
    CHECK(MutationWord::parse(w.str()) == w);
    CHECK(MutationWord::parse("") == MutationWord());
    CHECK(w.inverse().inverse() == w);
    CHECK_THROWS(MutationWord::parse("mu(1:2"));
    CHECK_THROWS(MutationWord::parse("nu(1:2)"));

    auto r = r_sequence_word(4, 1, 1);
    CHECK(r.str() == "mu(1:1), mu(1:2), mu(1:3), mu(1:4), mu(1:2), mu(1:1), swap(1:3,1:4)");
    CHECK(r_sequence_word(5, 1, 3).size() == 9);
}

TEST_CASE("x mutation is involutive and positive")
{
    auto s = XSeed::initial(build_Q(4, 2));
    for (int i = 1; i <= 4; ++i) {
        auto t = s.mutate(Vertex::grid(1, i));
        CHECK(t.mutate(Vertex::grid(1, i)) == s);
        CHECK(t.x(Vertex::grid(1, i)).all_coefficients_nonnegative());
    }
}

TEST_CASE("printed simple R-matrix for n=4")
{
    auto s = XSeed::initial(build_Q(4, 2));
    auto v = s.vars();
    auto r = closed_R_x(v, 4, 1);
    Poly expect = (mono(v, "2- 3 4 1+") + mono(v, "3- 4 1 2+") + mono(v, "4- 1 2 3+") + mono(v, "1- 2 3 4+")) *
                  mono(v, "2 3 4").pow(-1);
    CHECK(r[static_cast<std::size_t>(v->index(xname(local("1"))))] == expect);
    CHECK(r[static_cast<std::size_t>(v->index(xname(local("1-"))))] == mono(v, "1-"));
    CHECK(r[static_cast<std::size_t>(v->index(xname(local("3+"))))] == mono(v, "3+"));
}

TEST_CASE("printed enriched R-matrix for n=4")
{
    auto s = XSeed::initial(build_Q_tilde(4, 2));
    auto v = s.vars();
    auto r = closed_tilde_R(v, 4, 1);
    Poly expect = mono(v, "2- 3 4 1+ 1>2 2+>2 3->2 3+>3 4->3 4+>4 1->4") +
                  mono(v, "3- 4 1 2+ 2>3 3+>3 4->3 4+>4 1->4 2>2- 2>1+") +
                  mono(v, "4- 1 2 3+ 3>4 4+>4 1->4 2>2- 2>1+ 3>3- 3>2+") +
                  mono(v, "1- 2 3 4+ 4>1 2>2- 2>1+ 3>3- 3>2+ 4>4- 4>3+");
    CHECK(r[static_cast<std::size_t>(v->index(xname(local("1"))))] * mono(v, "2 3 4") == expect);
    // Frozen swaps and fixed frozen variables.
    CHECK(r[static_cast<std::size_t>(v->index(xname(Vertex::arrow(local("1+"), local("1")))))] == mono(v, "2>2-"));
    CHECK(r[static_cast<std::size_t>(v->index(xname(Vertex::arrow(local("2"), local("1+")))))] == mono(v, "2->1"));
    CHECK(r[static_cast<std::size_t>(v->index(xname(Vertex::arrow(local("1"), local("2")))))] == mono(v, "1>2"));

    // All X set to 1 recovers the simple R-matrix.
    auto q = XSeed::initial(build_Q(4, 2));
    auto rq = closed_R_x(q.vars(), 4, 1);
    std::vector<Fraction> spec;
    for (int k = 0; k < v->size(); ++k) {
        const std::string& nm = v->name(k);
        spec.push_back(q.vars()->contains(nm) ? Fraction(poly_var(q.vars(), nm)) : Fraction::constant(q.vars(), 1));
    }
    for (int i = 1; i <= 4; ++i) {
        auto idx = static_cast<std::size_t>(v->index(xname(local(std::to_string(i)))));
        auto jdx = static_cast<std::size_t>(q.vars()->index(xname(local(std::to_string(i)))));
        CHECK(substitute(r[idx], spec) == Fraction(rq[jdx]));
    }
}

TEST_CASE("R-sequence realizes the simple R-matrix")
{
    for (int n : {3, 4, 5}) {
        auto q = build_Q(n, 2);
        auto s = XSeed::initial(q);
        auto expect = closed_R_x(s.vars(), n, 1);
        for (int j = 1; j <= n; ++j) {
            auto t = apply_word(s, r_sequence_word(n, 1, j));
            CAPTURE(n);
            CAPTURE(j);
            CHECK(t.matrix() == q);
            CHECK(t.cluster() == expect);
        }
    }
}

TEST_CASE("R-sequence realizes the enriched R-matrix")
{
    for (int n : {3, 4}) {
        auto q = build_Q_tilde(n, 2);
        auto s = XSeed::initial(q);
        auto expect = closed_tilde_R(s.vars(), n, 1);
        for (int j = 1; j <= n; ++j) {
            auto t = apply_word(s, r_sequence_word(n, 1, j, &q));
            CAPTURE(n);
            CAPTURE(j);
            CHECK(t.matrix() == q);
            CHECK(t.cluster() == expect);
        }
    }
}

TEST_CASE("intermediate cluster after A_i and the factor S")
{
    for (int n : {3, 4, 5}) {
        auto s = XSeed::initial(build_Q(n, 2));
        auto v = s.vars();
        for (int i = 1; i <= n - 2; ++i) {
            s = s.mutate(Vertex::grid(1, i));
            CHECK(s.x(Vertex::grid(1, i)) == intermediate_half(v, n, 1, i));
        }
        auto r = closed_R_x(v, n, 1);
        Fraction S = S_factor(v, n, 1);
        for (int i = 1; i <= n; ++i) {
            auto idx = static_cast<std::size_t>(v->index(xname(Vertex::grid(1, i))));
            CHECK(Fraction(r[idx]) == S * Fraction(poly_var(v, xname(Vertex::grid(1, i)))));
        }
        auto rr = compose(as_fractions(r), as_fractions(r));
        CHECK(rr == identity_map(v));
    }
}

TEST_CASE("printed classical y formulas for n=3")
{
    auto s = YSeedUniversal::initial(build_Q(3, 2));
    auto v = s.vars();
    auto r = closed_R_y_classical(v, 3, 2, 1);
    auto at = [&](const std::string& t) { return r[static_cast<std::size_t>(v->index(yname(local(t))))]; };
    auto P = [&](const std::string& a, const std::string& b, const std::string& c) {
        return Fraction(ymono(v, a) + ymono(v, b) + ymono(v, c));
    };
    CHECK(at("1") == P("", "3", "3 1").inverse() * Fraction(ymono(v, "2")).inverse() * P("", "1", "1 2"));
    CHECK(at("1-") == P("", "1", "1 2").inverse() * Fraction(ymono(v, "1 1-")) * P("", "2", "2 3"));
    CHECK(at("1+") == P("", "2", "2 3").inverse() * Fraction(ymono(v, "2 1+")) * P("", "3", "3 1"));
}

TEST_CASE("universal y R-sequence matches the closed form")
{
    for (int n : {3, 4}) {
        for (int c : {0, 1, 2}) {
            auto q = build_Q(n, 2);
            auto s = YSeedUniversal::initial(q);
            auto expect = closed_R_y_classical(s.vars(), n, 2, c);
            for (int j = 1; j <= n; ++j) {
                auto t = apply_word(s, r_sequence_word(n, c, j));
                CAPTURE(n);
                CAPTURE(c);
                CAPTURE(j);
                CHECK(t.matrix() == q);
                CHECK(t.values() == expect);
                CHECK(t.subtraction_free());
            }
        }
    }
}

TEST_CASE("tropical y R-sequence matches the tropical closed form")
{
    const int m = 3;
    for (int n = 3; n <= 6; ++n) {
        auto q = build_Q(n, m);
        auto s = YSeedTropical::initial(q);
        for (int c = 0; c <= m; ++c) {
            auto expect = closed_R_y_tropical(q, n, m, c);
            for (int j = 1; j <= n; ++j) {
                auto t = apply_word(s, r_sequence_word(n, c, j));
                CHECK(t.matrix() == q);
                CHECK(t.values() == expect);
            }
        }
    }
}

TEST_CASE("periods")
{
    auto q = build_Q(3, 3);
    CHECK(check_period(q, MutationWord(), VertexPermutation(), SeedKind::Tropical));
    MutationWord kk;
    kk.mu(Vertex::grid(1, 1)).mu(Vertex::grid(1, 1));
    CHECK(check_period(q, kk, VertexPermutation(), SeedKind::Tropical));
    CHECK(check_period(q, kk, VertexPermutation(), SeedKind::Universal));
    CHECK(check_period(q, kk, VertexPermutation(), SeedKind::XY));
    MutationWord one;
    one.mu(Vertex::grid(1, 1));
    CHECK_FALSE(check_period(q, one, VertexPermutation(), SeedKind::Tropical));

    for (int n : {3, 4}) {
        auto qq = build_Q(n, 3);
        MutationWord lhs, rhs;
        lhs.append(r_sequence_word(n, 1, 1)).append(r_sequence_word(n, 2, 1)).append(r_sequence_word(n, 1, 1));
        rhs.append(r_sequence_word(n, 2, 1)).append(r_sequence_word(n, 1, 1)).append(r_sequence_word(n, 2, 1));
        MutationWord braid = lhs;
        braid.append(rhs.inverse());
        CHECK(check_period(qq, braid, VertexPermutation(), SeedKind::Tropical));
        MutationWord inv = r_sequence_word(n, 1, 2);
        inv.append(r_sequence_word(n, 1, 1));
        CHECK(check_period(qq, inv, VertexPermutation(), SeedKind::Tropical));
        if (n == 3) CHECK(check_period(qq, braid, VertexPermutation(), SeedKind::XY));
    }
}

TEST_CASE("principal parts commute with mutation")
{
    std::mt19937_64 rng(4);
    auto q = build_Q(3, 2);
    auto muts = q.mutable_indices();
    for (int trial = 0; trial < 5; ++trial) {
        MutationWord w;
        for (int k = 0; k < 6; ++k) w.mu(q.label(muts[rng() % muts.size()]));
        CHECK(check_pi_compatibility(q, w));
    }
    CHECK(check_pi_compatibility(q, r_sequence_word(3, 1, 2)));
}
