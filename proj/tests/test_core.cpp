#include "doctest.h"

#include <random>

#include "clr/eps.hpp"
#include "clr/fraction.hpp"
#include "clr/tropical.hpp"

using namespace clr;

namespace {

VarSetPtr xyz() { return make_varset({"x1", "x2", "x3"}); }

Poly random_poly(const VarSetPtr& v, std::mt19937_64& rng, int terms, int lo, int hi)
{
    std::uniform_int_distribution<int> ex(lo, hi), co(-5, 5);
    Poly p(v);
    for (int t = 0; t < terms; ++t) {
        Exponent e(static_cast<std::size_t>(v->size()));
        for (auto& x : e) x = ex(rng);
        p.add_term(e, Rational(co(rng)));
    }
    return p;
}

std::vector<Fp> random_point(int n, std::uint64_t p, std::mt19937_64& rng)
{
    std::vector<Fp> r;
    for (int i = 0; i < n; ++i) r.emplace_back(random_nonzero(p, rng), p);
    return r;
}

}  // namespace

TEST_CASE("prime field basics")
{
    const std::uint64_t p = 1000000007;
    Fp a = Fp::from_int(-3, p);
    CHECK(a.v == p - 3);
    CHECK((a * a.inv()).v == 1);
    CHECK(Fp::from_rational(Rational(1, 2), p) * Fp::from_int(2, p) == Fp::from_int(1, p));
    CHECK(is_prime_u64(p));
    CHECK_FALSE(is_prime_u64(1000000007ULL * 3));
    std::mt19937_64 rng(1);
    for (unsigned L : {5u, 7u, 11u}) {
        std::uint64_t q = random_prime_with_root(61, L, rng);
        CHECK(is_prime_u64(q));
        CHECK((q - 1) % L == 0);
        CHECK((q >> 60) == 1);
        std::uint64_t z = primitive_root_of_unity(q, L, rng);
        CHECK(powmod(z, L, q) == 1);
        CHECK(z != 1);
    }
}

TEST_CASE("eps scalars")
{
    EpsScalar a = EpsScalar::eps_pow(2) + EpsScalar(3);
    EpsScalar b = EpsScalar::eps_pow(-2) - EpsScalar(1);
    CHECK((a * b).at_one() == a.at_one() * b.at_one());
    CHECK((a - a).is_zero());
    CHECK(EpsScalar::eps_pow(1).shifted(-1) == EpsScalar(1));
    CHECK(EpsScalar::eps_pow(2, -1).str() == "-e^2");
}

TEST_CASE("laurent multiplication")
{
    auto v = xyz();
    Poly x1 = poly_var(v, "x1"), x2 = poly_var(v, "x2");
    CHECK(x1 * poly_var(v, "x1", -1) == poly_const(v, 1));
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);

    std::mt19937_64 rng(7);
    const std::uint64_t p = 2305843009213693951ULL;
    for (int trial = 0; trial < 10; ++trial) {
        Poly a = random_poly(v, rng, 6, -2, 3), b = random_poly(v, rng, 5, -1, 2), c = random_poly(v, rng, 4, 0, 2);
        for (int k = 0; k < 20; ++k) {
            auto pt = random_point(3, p, rng);
            CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
            CHECK(((a * b) * c).evaluate(pt) == (a * (b * c)).evaluate(pt));
            CHECK((a * (b + c)).evaluate(pt) == (a * b + a * c).evaluate(pt));
        }
    }
}

TEST_CASE("laurent exact division")
{
    auto v = xyz();
    Poly x1 = poly_var(v, "x1"), x2 = poly_var(v, "x2"), x3 = poly_var(v, "x3");
    CHECK((x1 * x2 + x1 * x3).exact_divide(x1) == x2 + x3);
    // Monomials are units in the Laurent ring; only non-monomial divisors can fail.
    CHECK((x1 + x2).exact_divide(x3) * x3 == x1 + x2);
    CHECK_THROWS_AS((x1 + x2).exact_divide(x1 + x3), NotDivisible);
    CHECK_THROWS_AS((x1 * x1 + x2).exact_divide(x1 + x2), NotDivisible);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Poly a = random_poly(v, rng, 5, -2, 2), b = random_poly(v, rng, 3, -1, 2);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).exact_divide(b) == a);
    }
}

TEST_CASE("fractions")
{
    auto v = xyz();
    Fraction x1(poly_var(v, "x1")), x2(poly_var(v, "x2")), one = Fraction::constant(v, 1);
    Fraction f = (x1 + x2) / (one + x1);
    CHECK(f * ((one + x1) / (x1 + x2)) == one);
    CHECK(f + f == (x1 + x2) * Fraction::constant(v, 2) / (one + x1));
    CHECK(f - f == Fraction(Poly(v)));
    CHECK(f.pow(-2) == ((one + x1) / (x1 + x2)).pow(2));
    CHECK(((x1 * x1 - one) / (x1 - one)).as_laurent() == (x1 + one).expanded());
    CHECK(f.numerator() * (one + x1).expanded() == f.denominator() * (x1 + x2).expanded());

    const std::uint64_t p = 1000000007;
    std::mt19937_64 rng(3);
    auto pt = random_point(3, p, rng);
    CHECK(f.evaluate(pt) == (pt[0] + pt[1]) / (Fp::from_int(1, p) + pt[0]));

    // Substitution x1 -> x2/x1, x2 -> x1, x3 -> x3 applied twice to f.
    std::vector<Fraction> img = {x2 / x1, x1, Fraction(poly_var(v, "x3"))};
    Fraction g = f.substitute(img);
    CHECK(g == (x2 / x1 + x1) / (one + x2 / x1));
}

TEST_CASE("tropical semifield")
{
    TropicalPoint a({1, 0}), b({0, 2});
    CHECK(trop_add(a, b) == TropicalPoint({0, 0}));
    CHECK(trop_add(a, a) == a);
    CHECK(trop_mul(a, b) == TropicalPoint({1, 2}));
    CHECK_THROWS(trop_add(a, TropicalPoint({1})));

    auto v = make_varset({"y1", "y2"});
    Poly y1 = poly_var(v, "y1"), y2 = poly_var(v, "y2"), one = poly_const(v, 1);
    CHECK(principal_part(y1, one) == TropicalPoint({1, 0}));
    CHECK(principal_part(y1 * y1 * y2, one + y2) == TropicalPoint({2, 1}));
    CHECK_THROWS(principal_part(y1 - y2, one));
}

TEST_CASE("principal part is a semifield homomorphism")
{
    auto v = make_varset({"y1", "y2", "y3"});
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> ex(-2, 2), co(1, 3), nt(1, 4);
    auto sf = [&]() {
        Poly p(v);
        int k = nt(rng);
        for (int t = 0; t < k; ++t) p.add_term({ex(rng), ex(rng), ex(rng)}, Rational(co(rng)));
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        Poly a = sf(), b = sf(), c = sf(), d = sf();
        TropicalPoint pf = principal_part(a, b), pg = principal_part(c, d);
        CHECK(principal_part(a * c, b * d) == trop_mul(pf, pg));
        CHECK(principal_part(a * d + c * b, b * d) == trop_add(pf, pg));
    }
}
