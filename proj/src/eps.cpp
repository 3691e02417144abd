#include "clr/eps.hpp"

#include <map>
#include <stdexcept>

#include "clr/scalar.hpp"

namespace clr {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in eps-scalar");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow in eps-scalar");
    return r;
}

EpsScalar EpsScalar::eps_pow(int k, std::int64_t c)
{
    EpsScalar s;
    if (c) s.terms_.push_back({k, c});
    return s;
}

EpsScalar EpsScalar::shifted(int k) const
{
    EpsScalar s = *this;
    for (auto& t : s.terms_) t.first += k;
    return s;
}

std::int64_t EpsScalar::at_one() const
{
    std::int64_t r = 0;
    for (auto& t : terms_) r = checked_add(r, t.second);
    return r;
}

EpsScalar& EpsScalar::operator+=(const EpsScalar& o)
{
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin();
    auto b = o.terms_.cbegin();
    while (a != terms_.cend() || b != o.terms_.cend()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            std::int64_t c = checked_add(a->second, b->second);
            if (c) out.push_back({a->first, c});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

EpsScalar& EpsScalar::operator-=(const EpsScalar& o) { return *this += -o; }

EpsScalar operator-(const EpsScalar& a)
{
    EpsScalar r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

EpsScalar operator*(const EpsScalar& a, const EpsScalar& b)
{
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        return EpsScalar::eps_pow(a.terms_[0].first + b.terms_[0].first,
                                  checked_mul(a.terms_[0].second, b.terms_[0].second));
    }
    std::map<int, std::int64_t> acc;
    for (auto& s : a.terms_) {
        for (auto& t : b.terms_) {
            auto& c = acc[s.first + t.first];
            c = checked_add(c, checked_mul(s.second, t.second));
        }
    }
    EpsScalar r;
    for (auto& [k, c] : acc) {
        if (c) r.terms_.push_back({k, c});
    }
    return r;
}

std::string EpsScalar::str() const
{
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [k, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        if (k == 0) {
            s += std::to_string(mag);
            continue;
        }
        if (mag != 1) s += std::to_string(mag) + "*";
        s += k == 1 ? std::string("e") : "e^" + std::to_string(k);
    }
    return s;
}

}  // namespace clr
