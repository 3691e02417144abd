#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clr/laurent.hpp"

namespace clr {

// Rational function num * prod f_k^{e_k}.  The factors f_k are normalized
// polynomials (monic in the lex-leading term, no monomial content) kept
// unexpanded so that sums can pull out common powers.  Equality is decided by
// expanding the difference over the common factor part; no gcd is ever taken.
class Fraction {
public:
    using Factor = std::pair<Poly, int>;

    Fraction() = default;
    Fraction(Poly p) : num_(std::move(p)) {}
    static Fraction atom(const Poly& p);
    static Fraction constant(const VarSetPtr& v, long c) { return Fraction(poly_const(v, c)); }

    const Poly& expanded() const { return num_; }
    const std::vector<Factor>& factors() const { return fac_; }
    const VarSetPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    Poly numerator() const;
    Poly denominator() const;
    // The value as a Laurent polynomial; throws NotDivisible if it is not one.
    Poly as_laurent() const;

    Fraction inverse() const;
    Fraction pow(int k) const;

    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.inverse(); }
    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a);
    friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
    Fraction& operator*=(const Fraction& b) { return *this = *this * b; }
    Fraction& operator+=(const Fraction& b) { return *this = *this + b; }

    // Cross-multiplication equality.
    friend bool operator==(const Fraction& a, const Fraction& b) { return (a - b).is_zero(); }

    Fp evaluate(const std::vector<Fp>& point) const;
    // Substitute images (one per variable of vars()) into this rational function.
    Fraction substitute(const std::vector<Fraction>& images) const;

    std::string str() const;

private:
    void cancel_denominators();

    Poly num_;
    std::vector<Factor> fac_;
};

// Substitute Fractions for the variables of a Laurent polynomial.
Fraction substitute(const Poly& f, const std::vector<Fraction>& images);

// Split p = c * y^m * q with q normalized; returns (c*y^m, q).
std::pair<Poly, Poly> split_content(const Poly& p);

}  // namespace clr
