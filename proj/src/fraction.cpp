#include "clr/fraction.hpp"

#include <map>

namespace clr {

std::pair<Poly, Poly> split_content(const Poly& p)
{
    if (p.is_zero()) throw ArithmeticError("content of zero polynomial");
    Exponent m = p.min_exponent();
    const Rational lead = p.terms().rbegin()->second;
    Poly content = Poly::monomial(p.vars(), m, lead);
    for (auto& x : m) x = -x;
    Rational inv = 1 / lead;
    Poly q = p.shifted(m).scaled(inv);
    return {content, q};
}

Fraction Fraction::atom(const Poly& p)
{
    auto [content, q] = split_content(p);
    Fraction r(content);
    if (!q.is_monomial()) r.fac_.push_back({q, 1});
    return r;
}

namespace {

void merge_factor(std::vector<Fraction::Factor>& fs, const Poly& f, int k)
{
    for (auto it = fs.begin(); it != fs.end(); ++it) {
        if (it->first == f) {
            it->second += k;
            if (it->second == 0) fs.erase(it);
            return;
        }
    }
    if (k) fs.push_back({f, k});
}

int power_of(const std::vector<Fraction::Factor>& fs, const Poly& f)
{
    for (auto& [g, k] : fs) {
        if (g == f) return k;
    }
    return 0;
}

}  // namespace

Fraction operator*(const Fraction& a, const Fraction& b)
{
    Fraction r(a.num_ * b.num_);
    if (r.num_.is_zero()) return r;
    r.fac_ = a.fac_;
    for (auto& [f, k] : b.fac_) merge_factor(r.fac_, f, k);
    r.cancel_denominators();
    return r;
}

Fraction operator-(const Fraction& a)
{
    Fraction r = a;
    r.num_ = -r.num_;
    return r;
}

Fraction operator+(const Fraction& a, const Fraction& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Common part: min power of each factor over both summands.
    std::vector<Fraction::Factor> common;
    std::vector<Fraction::Factor> all = a.fac_;
    for (auto& [f, k] : b.fac_) {
        if (power_of(all, f) == 0) all.push_back({f, 0});
    }
    Poly sa = a.num_, sb = b.num_;
    for (auto& [f, k0] : all) {
        (void)k0;
        int ka = power_of(a.fac_, f), kb = power_of(b.fac_, f);
        int g = std::min(ka, kb);
        if (g) common.push_back({f, g});
        for (int i = 0; i < ka - g; ++i) sa *= f;
        for (int i = 0; i < kb - g; ++i) sb *= f;
    }
    Fraction r(sa + sb);
    if (r.num_.is_zero()) return r;
    r.fac_ = std::move(common);
    r.cancel_denominators();
    return r;
}

void Fraction::cancel_denominators()
{
    for (auto it = fac_.begin(); it != fac_.end();) {
        while (it->second < 0) {
            auto q = num_.try_divide(it->first);
            if (!q) break;
            num_ = std::move(*q);
            ++it->second;
        }
        if (it->second == 0) it = fac_.erase(it);
        else ++it;
    }
}

Fraction Fraction::inverse() const
{
    if (num_.is_zero()) throw ArithmeticError("inverse of zero rational function");
    Fraction r;
    if (num_.is_monomial()) {
        r.num_ = num_.pow(-1);
    } else {
        auto [content, q] = split_content(num_);
        r.num_ = content.pow(-1);
        r.fac_.push_back({q, -1});
    }
    for (auto& [f, k] : fac_) merge_factor(r.fac_, f, -k);
    return r;
}

Fraction Fraction::pow(int k) const
{
    if (k < 0) return inverse().pow(-k);
    if (num_.is_zero()) {
        if (k == 0) throw ArithmeticError("0^0");
        return *this;
    }
    Fraction r(num_.unit_like());
    Fraction base = *this;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

Poly Fraction::numerator() const
{
    Poly r = num_;
    for (auto& [f, k] : fac_) {
        for (int i = 0; i < k; ++i) r *= f;
    }
    return r;
}

Poly Fraction::denominator() const
{
    Poly r = poly_const(num_.vars(), 1);
    for (auto& [f, k] : fac_) {
        for (int i = 0; i < -k; ++i) r *= f;
    }
    return r;
}

Poly Fraction::as_laurent() const { return numerator().exact_divide(denominator()); }

Fp Fraction::evaluate(const std::vector<Fp>& point) const
{
    Fp v = num_.evaluate(point);
    for (auto& [f, k] : fac_) {
        Fp w = f.evaluate(point);
        if (k < 0 && w.is_zero()) throw ArithmeticError("pole at evaluation point");
        v *= w.pow(k);
    }
    return v;
}

Fraction substitute(const Poly& f, const std::vector<Fraction>& images)
{
    if (static_cast<int>(images.size()) != f.nvars()) throw std::invalid_argument("substitution arity mismatch");
    if (images.empty()) throw std::invalid_argument("empty substitution");
    VarSetPtr target = images.front().vars();
    std::map<std::pair<int, int>, Fraction> cache;
    auto power = [&](int v, int e) -> const Fraction& {
        auto key = std::make_pair(v, e);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, images[static_cast<std::size_t>(v)].pow(e)).first;
        return it->second;
    };
    Fraction acc{Poly(target)};
    for (auto& [e, c] : f.terms()) {
        Fraction t(Poly::constant(target, c));
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i]) t = t * power(static_cast<int>(i), e[i]);
        }
        acc = acc + t;
    }
    return acc;
}

Fraction Fraction::substitute(const std::vector<Fraction>& images) const
{
    Fraction r = clr::substitute(num_, images);
    for (auto& [f, k] : fac_) r = r * clr::substitute(f, images).pow(k);
    return r;
}

std::string Fraction::str() const
{
    Poly d = denominator();
    std::string n = "(" + numerator().str() + ")";
    if (d.is_monomial() && d.terms().begin()->first == Exponent(d.terms().begin()->first.size(), 0) &&
        d.terms().begin()->second == 1) {
        return n;
    }
    return n + "/(" + d.str() + ")";
}

}  // namespace clr
