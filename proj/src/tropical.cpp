#include "clr/tropical.hpp"

#include <algorithm>
#include <stdexcept>

namespace clr {

namespace {

void check_len(const TropicalPoint& a, const TropicalPoint& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("tropical length mismatch");
}

}  // namespace

TropicalPoint trop_add(const TropicalPoint& a, const TropicalPoint& b)
{
    check_len(a, b);
    std::vector<int> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
    return TropicalPoint(std::move(e));
}

TropicalPoint trop_mul(const TropicalPoint& a, const TropicalPoint& b)
{
    check_len(a, b);
    std::vector<int> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
    return TropicalPoint(std::move(e));
}

TropicalPoint TropicalPoint::inverse() const { return pow(-1); }

TropicalPoint TropicalPoint::pow(int k) const
{
    std::vector<int> e = e_;
    for (auto& x : e) x *= k;
    return TropicalPoint(std::move(e));
}

std::string TropicalPoint::str() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e_[i]);
    }
    return s + ")";
}

TropicalPoint principal_part(const Poly& num, const Poly& den)
{
    if (num.is_zero() || den.is_zero()) throw std::invalid_argument("principal part of zero");
    if (!num.all_coefficients_nonnegative() || !den.all_coefficients_nonnegative()) {
        throw std::invalid_argument("input is not subtraction-free");
    }
    Exponent a = num.min_exponent(), b = den.min_exponent();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return TropicalPoint(std::move(a));
}

}  // namespace clr
