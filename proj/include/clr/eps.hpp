#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace clr {

// Element of Z[eps, eps^-1]: sorted (exponent, coefficient) pairs, no zero coefficients.
class EpsScalar {
public:
    using Term = std::pair<int, std::int64_t>;

    EpsScalar() = default;
    EpsScalar(std::int64_t c) { if (c) terms_.push_back({0, c}); }
    static EpsScalar eps_pow(int k, std::int64_t c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Multiply by eps^k.
    EpsScalar shifted(int k) const;
    // Value at eps = 1.
    std::int64_t at_one() const;
    // True for c*eps^k with a single term.
    bool is_monomial() const { return terms_.size() == 1; }

    EpsScalar& operator+=(const EpsScalar& o);
    EpsScalar& operator-=(const EpsScalar& o);
    friend EpsScalar operator+(EpsScalar a, const EpsScalar& b) { return a += b; }
    friend EpsScalar operator-(EpsScalar a, const EpsScalar& b) { return a -= b; }
    friend EpsScalar operator-(const EpsScalar& a);
    friend EpsScalar operator*(const EpsScalar& a, const EpsScalar& b);
    friend bool operator==(const EpsScalar& a, const EpsScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator<(const EpsScalar& a, const EpsScalar& b) { return a.terms_ < b.terms_; }

    std::string str() const;

private:
    std::vector<Term> terms_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace clr
