#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "clr/scalar.hpp"
#include "clr/varset.hpp"

namespace clr {

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Exponent = std::vector<int>;

// Multivariate Laurent polynomial with dense exponent vectors over a VarSet.
// C is Rational or Fp.
template <class C>
class MultiLaurent {
public:
    using Terms = std::map<Exponent, C>;

    MultiLaurent() = default;
    explicit MultiLaurent(VarSetPtr vars) : vars_(std::move(vars)) {}

    static MultiLaurent constant(VarSetPtr vars, const C& c)
    {
        MultiLaurent r(vars);
        if (!coef_is_zero(c)) r.terms_.emplace(Exponent(static_cast<std::size_t>(r.nvars()), 0), c);
        return r;
    }
    static MultiLaurent monomial(VarSetPtr vars, Exponent e, const C& c)
    {
        MultiLaurent r(vars);
        if (static_cast<int>(e.size()) != r.nvars()) throw std::invalid_argument("exponent length mismatch");
        if (!coef_is_zero(c)) r.terms_.emplace(std::move(e), c);
        return r;
    }
    static MultiLaurent variable(VarSetPtr vars, int idx, const C& one, int power = 1)
    {
        Exponent e(static_cast<std::size_t>(vars->size()), 0);
        e.at(static_cast<std::size_t>(idx)) = power;
        return monomial(vars, std::move(e), one);
    }

    const VarSetPtr& vars() const { return vars_; }
    int nvars() const { return vars_ ? vars_->size() : 0; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const Exponent& e, const C& c)
    {
        if (coef_is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            C s = it->second + c;
            if (coef_is_zero(s)) terms_.erase(it);
            else it->second = s;
        }
    }

    MultiLaurent& operator+=(const MultiLaurent& o)
    {
        adopt(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiLaurent& operator-=(const MultiLaurent& o)
    {
        adopt(o);
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
    friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
    friend MultiLaurent operator-(const MultiLaurent& a)
    {
        MultiLaurent r(a.vars_);
        for (auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b)
    {
        MultiLaurent r(a.vars_ ? a.vars_ : b.vars_);
        check_compatible(a, b);
        Exponent e(static_cast<std::size_t>(r.nvars()));
        for (auto& [ea, ca] : a.terms_) {
            for (auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    MultiLaurent& operator*=(const MultiLaurent& o) { return *this = *this * o; }
    MultiLaurent scaled(const C& c) const
    {
        MultiLaurent r(vars_);
        if (coef_is_zero(c)) return r;
        for (auto& [e, d] : terms_) r.terms_.emplace(e, d * c);
        return r;
    }
    MultiLaurent shifted(const Exponent& s) const
    {
        MultiLaurent r(vars_);
        for (auto& [e, c] : terms_) {
            Exponent f = e;
            for (std::size_t i = 0; i < f.size(); ++i) f[i] += s[i];
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }
    friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) { return a.terms_ == b.terms_; }

    // Power; negative powers only for monomials.
    MultiLaurent pow(int k) const
    {
        if (k < 0) {
            if (!is_monomial()) throw NotDivisible("negative power of a non-monomial");
            auto& [e, c] = *terms_.begin();
            Exponent f = e;
            for (auto& x : f) x *= k;
            C inv = c / c;
            for (int i = 0; i < -k; ++i) inv = inv / c;
            return monomial(vars_, std::move(f), inv);
        }
        MultiLaurent base = *this, r = unit_like();
        while (k) {
            if (k & 1) r *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return r;
    }

    // Constant 1 with the same coefficient ring as this element (requires a nonzero term).
    MultiLaurent unit_like() const
    {
        if (terms_.empty()) throw std::logic_error("cannot derive unit from zero polynomial");
        const C& c = terms_.begin()->second;
        return constant(vars_, c / c);
    }

    // Componentwise minimum / maximum exponent over the support.
    Exponent min_exponent() const { return extreme(true); }
    Exponent max_exponent() const { return extreme(false); }

    bool all_coefficients_nonnegative() const
    {
        if constexpr (std::is_same_v<C, Rational>) {
            for (auto& t : terms_) {
                if (sgn(t.second) < 0) return false;
            }
        }
        return true;
    }

    // q with q*b == *this, or nullopt.
    std::optional<MultiLaurent> try_divide(const MultiLaurent& b) const
    {
        if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
        check_compatible(*this, b);
        MultiLaurent q(vars_ ? vars_ : b.vars_);
        if (is_zero()) return q;
        if (b.is_monomial()) {
            auto& [eb, cb] = *b.terms_.begin();
            for (auto& [e, c] : terms_) {
                Exponent f = e;
                for (std::size_t i = 0; i < f.size(); ++i) f[i] -= eb[i];
                q.terms_.emplace(std::move(f), c / cb);
            }
            return q;
        }
        const Exponent amin = min_exponent(), amax = max_exponent();
        const Exponent bmin = b.min_exponent(), bmax = b.max_exponent();
        Exponent lo(amin.size()), hi(amin.size());
        for (std::size_t i = 0; i < lo.size(); ++i) {
            lo[i] = amin[i] - bmin[i];
            hi[i] = amax[i] - bmax[i];
            if (lo[i] > hi[i]) return std::nullopt;
        }
        MultiLaurent r = *this;
        auto& [lb, cb] = *b.terms_.rbegin();
        Exponent t(lo.size());
        while (!r.is_zero()) {
            auto& [lr, cr] = *r.terms_.rbegin();
            for (std::size_t i = 0; i < t.size(); ++i) {
                t[i] = lr[i] - lb[i];
                if (t[i] < lo[i] || t[i] > hi[i]) return std::nullopt;
            }
            C c = cr / cb;
            q.terms_.emplace(t, c);
            for (auto& [e, d] : b.terms_) {
                Exponent f = e;
                for (std::size_t i = 0; i < f.size(); ++i) f[i] += t[i];
                r.add_term(f, -(d * c));
            }
        }
        return q;
    }

    MultiLaurent exact_divide(const MultiLaurent& b) const
    {
        auto q = try_divide(b);
        if (!q) throw NotDivisible("Laurent polynomial is not divisible");
        return *q;
    }

    // Evaluate at a point of (F_p^*)^nvars.
    Fp evaluate(const std::vector<Fp>& point) const
    {
        if (static_cast<int>(point.size()) != nvars()) throw std::invalid_argument("point dimension mismatch");
        if (point.empty()) throw std::invalid_argument("empty evaluation point");
        const std::uint64_t p = point.front().p;
        Fp acc(0, p);
        for (auto& [e, c] : terms_) {
            Fp t = to_fp(c, p);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i]) t *= point[i].pow(e[i]);
            }
            acc += t;
        }
        return acc;
    }

    // Rename into a larger variable set (by names).
    MultiLaurent embed(const VarSetPtr& target) const
    {
        MultiLaurent r(target);
        std::vector<int> map(static_cast<std::size_t>(nvars()));
        for (int i = 0; i < nvars(); ++i) map[static_cast<std::size_t>(i)] = target->index(vars_->name(i));
        for (auto& [e, c] : terms_) {
            Exponent f(static_cast<std::size_t>(target->size()), 0);
            for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(map[i])] += e[i];
            r.add_term(f, c);
        }
        return r;
    }

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Highest terms first reads more naturally.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string cs = coef_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs.erase(0, 1);
            if (!first) os << (neg ? " - " : " + ");
            else if (neg) os << "-";
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_->name(static_cast<int>(i));
                if (e[i] != 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) os << cs;
            else if (cs == "1") os << mono;
            else os << cs << "*" << mono;
        }
        return os.str();
    }

private:
    static Fp to_fp(const Rational& c, std::uint64_t p) { return Fp::from_rational(c, p); }
    static Fp to_fp(const Fp& c, std::uint64_t) { return c; }

    static void check_compatible(const MultiLaurent& a, const MultiLaurent& b)
    {
        if (a.vars_ && b.vars_ && a.vars_ != b.vars_ && a.vars_->names() != b.vars_->names()) {
            throw std::invalid_argument("incompatible variable sets");
        }
    }
    void adopt(const MultiLaurent& o)
    {
        check_compatible(*this, o);
        if (!vars_) vars_ = o.vars_;
    }
    Exponent extreme(bool lo) const
    {
        Exponent r;
        for (auto& [e, c] : terms_) {
            if (r.empty()) {
                r = e;
                continue;
            }
            for (std::size_t i = 0; i < r.size(); ++i) r[i] = lo ? std::min(r[i], e[i]) : std::max(r[i], e[i]);
        }
        if (r.empty()) r.assign(static_cast<std::size_t>(nvars()), 0);
        return r;
    }

    VarSetPtr vars_;
    Terms terms_;
};

using Poly = MultiLaurent<Rational>;
using PolyFp = MultiLaurent<Fp>;

inline Poly poly_const(const VarSetPtr& v, long c) { return Poly::constant(v, Rational(c)); }
inline Poly poly_var(const VarSetPtr& v, const std::string& name, int power = 1)
{
    return Poly::variable(v, v->index(name), Rational(1), power);
}

// Reduce rational coefficients modulo p.
inline PolyFp reduce_mod(const Poly& a, std::uint64_t p)
{
    PolyFp r(a.vars());
    for (auto& [e, c] : a.terms()) r.add_term(e, Fp::from_rational(c, p));
    return r;
}

}  // namespace clr
