#pragma once

#include <string>
#include <vector>

#include "clr/laurent.hpp"

namespace clr {

// Element prod (y_i^0)^{n_i} of the tropical semifield.
class TropicalPoint {
public:
    TropicalPoint() = default;
    explicit TropicalPoint(std::vector<int> e) : e_(std::move(e)) {}
    static TropicalPoint unit(std::size_t n) { return TropicalPoint(std::vector<int>(n, 0)); }
    static TropicalPoint generator(std::size_t n, std::size_t i)
    {
        std::vector<int> e(n, 0);
        e.at(i) = 1;
        return TropicalPoint(std::move(e));
    }

    const std::vector<int>& exponents() const { return e_; }
    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }

    TropicalPoint inverse() const;
    TropicalPoint pow(int k) const;

    friend bool operator==(const TropicalPoint& a, const TropicalPoint& b) { return a.e_ == b.e_; }
    std::string str() const;

private:
    std::vector<int> e_;
};

// a (+) b: componentwise min.
TropicalPoint trop_add(const TropicalPoint& a, const TropicalPoint& b);
// a * b: componentwise sum.
TropicalPoint trop_mul(const TropicalPoint& a, const TropicalPoint& b);

// Principal part [f] of a subtraction-free f = num/den (nonnegative
// coefficients).  Computed as min-support(num) - min-support(den), which is the
// tropical evaluation and agrees with the constant-term factorization whenever
// the latter exists.
TropicalPoint principal_part(const Poly& num, const Poly& den);

}  // namespace clr
