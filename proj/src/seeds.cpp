#include "clr/seeds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace clr {

MutationWord& MutationWord::mu(Vertex v)
{
    steps_.push_back({Step::Kind::Mutate, v, v});
    return *this;
}

MutationWord& MutationWord::swap(Vertex a, Vertex b)
{
    steps_.push_back({Step::Kind::Swap, a, b});
    return *this;
}

MutationWord& MutationWord::append(const MutationWord& w)
{
    steps_.insert(steps_.end(), w.steps_.begin(), w.steps_.end());
    return *this;
}

MutationWord MutationWord::inverse() const
{
    MutationWord r;
    r.steps_.assign(steps_.rbegin(), steps_.rend());
    return r;
}

std::string MutationWord::str() const
{
    std::ostringstream os;
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        if (k) os << ", ";
        const Step& s = steps_[k];
        if (s.kind == Step::Kind::Mutate) os << "mu(" << s.a.str() << ")";
        else os << "swap(" << s.a.str() << "," << s.b.str() << ")";
    }
    return os.str();
}

MutationWord MutationWord::parse(const std::string& text)
{
    MutationWord w;
    std::vector<std::string> tokens;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth < 0) throw std::invalid_argument("unbalanced parentheses in mutation word");
        if (ch == ',' && depth == 0) {
            tokens.push_back(cur);
            cur.clear();
        } else if (ch != ' ' && ch != '\t' && ch != '\n') {
            cur += ch;
        }
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses in mutation word");
    if (!cur.empty() || !tokens.empty()) tokens.push_back(cur);
    for (auto& t : tokens) {
        if (t.size() < 4 || t.back() != ')') throw std::invalid_argument("bad token '" + t + "'");
        if (t.rfind("mu(", 0) == 0) {
            w.mu(Vertex::parse(t.substr(3, t.size() - 4)));
        } else if (t.rfind("swap(", 0) == 0) {
            std::string body = t.substr(5, t.size() - 6);
            auto c = body.find(',');
            if (c == std::string::npos) throw std::invalid_argument("swap needs two vertices: '" + t + "'");
            w.swap(Vertex::parse(body.substr(0, c)), Vertex::parse(body.substr(c + 1)));
        } else {
            throw std::invalid_argument("bad token '" + t + "'");
        }
    }
    return w;
}

MutationWord r_sequence_word(int n, int c, int j, const ExchangeMatrix* q)
{
    if (n < 3) throw std::invalid_argument("R-sequence needs n >= 3");
    auto v = [&](int i) { return Vertex::grid(c, wrap(i, n)); };
    MutationWord w;
    for (int k = 0; k < n; ++k) w.mu(v(j + k));
    for (int k = 3; k <= n; ++k) w.mu(v(j - k));
    w.swap(v(j - 2), v(j - 1));
    if (!q) return w;
    auto frozen_swap = [&](Vertex a, Vertex b) {
        bool ha = q->contains(a), hb = q->contains(b);
        if (ha != hb) throw std::invalid_argument("frozen swap partner missing for " + (ha ? a : b).str());
        if (ha) w.swap(a, b);
    };
    for (int i = 1; i <= n; ++i) {
        auto g = [&](int jj, int ii) { return Vertex::grid(jj, wrap(ii, n)); };
        frozen_swap(Vertex::arrow(g(c, i), g(c + 1, i - 1)), Vertex::arrow(g(c - 1, i), g(c, i - 1)));
        frozen_swap(Vertex::arrow(g(c + 1, i), g(c, i)), Vertex::arrow(g(c, i + 1), g(c - 1, i + 1)));
    }
    return w;
}

std::string xname(const Vertex& v) { return "x" + v.str(); }
std::string yname(const Vertex& v) { return "y" + v.str(); }

namespace {

VarSetPtr names_for(const ExchangeMatrix& b, std::string (*name)(const Vertex&))
{
    std::vector<std::string> names;
    for (auto& v : b.labels()) names.push_back(name(v));
    return make_varset(std::move(names));
}

template <class T>
std::vector<T> permute_values(const ExchangeMatrix& b, const std::vector<T>& vals, const VertexPermutation& s)
{
    std::vector<T> r = vals;
    for (int u = 0; u < b.size(); ++u) {
        r.at(static_cast<std::size_t>(b.index(s(b.label(u))))) = vals[static_cast<std::size_t>(u)];
    }
    return r;
}

// prod_{b_jk > 0} x_j^{b_jk} and prod_{b_jk < 0} x_j^{-b_jk}.
std::pair<Poly, Poly> exchange_monomials(const ExchangeMatrix& b, const std::vector<Poly>& x, int k, const Poly& one)
{
    Poly plus = one, minus = one;
    for (int j = 0; j < b.size(); ++j) {
        const int e = b.b(j, k);
        if (e > 0) plus *= x[static_cast<std::size_t>(j)].pow(e);
        if (e < 0) minus *= x[static_cast<std::size_t>(j)].pow(-e);
    }
    return {plus, minus};
}

}  // namespace

XSeed XSeed::initial(const ExchangeMatrix& b)
{
    XSeed s;
    s.b_ = b;
    s.vars_ = names_for(b, xname);
    for (int k = 0; k < b.size(); ++k) s.x_.push_back(Poly::variable(s.vars_, k, Rational(1)));
    return s;
}

XSeed XSeed::mutate(const Vertex& kv) const
{
    const int k = b_.index(kv);
    XSeed r = *this;
    r.b_ = b_.mutate(k);
    auto [plus, minus] = exchange_monomials(b_, x_, k, poly_const(vars_, 1));
    r.x_[static_cast<std::size_t>(k)] = (plus + minus).exact_divide(x_[static_cast<std::size_t>(k)]);
    return r;
}

XSeed XSeed::permute(const VertexPermutation& s) const
{
    XSeed r = *this;
    r.b_ = b_.permuted(s);
    r.x_ = permute_values(b_, x_, s);
    return r;
}

bool operator==(const XSeed& a, const XSeed& b) { return a.b_ == b.b_ && a.x_ == b.x_; }

YSeedUniversal YSeedUniversal::initial(const ExchangeMatrix& b)
{
    YSeedUniversal s;
    s.b_ = b;
    s.vars_ = names_for(b, yname);
    for (int k = 0; k < b.size(); ++k) s.y_.emplace_back(Poly::variable(s.vars_, k, Rational(1)));
    return s;
}

YSeedUniversal YSeedUniversal::mutate(const Vertex& kv) const
{
    const int k = b_.index(kv);
    if (b_.is_frozen(k)) throw FrozenVertexError("cannot mutate at frozen vertex " + kv.str());
    YSeedUniversal r = *this;
    r.b_ = b_.mutate(k);
    const Fraction& yk = y_[static_cast<std::size_t>(k)];
    const Fraction one = Fraction::constant(vars_, 1);
    const Fraction up = one + yk, down = one + yk.inverse();
    for (int i = 0; i < b_.size(); ++i) {
        if (i == k) continue;
        const int bki = b_.b(k, i);
        auto& yi = r.y_[static_cast<std::size_t>(i)];
        if (bki > 0) yi = yi * down.pow(-bki);
        else if (bki < 0) yi = yi * up.pow(-bki);
    }
    r.y_[static_cast<std::size_t>(k)] = yk.inverse();
    return r;
}

YSeedUniversal YSeedUniversal::permute(const VertexPermutation& s) const
{
    YSeedUniversal r = *this;
    r.b_ = b_.permuted(s);
    r.y_ = permute_values(b_, y_, s);
    return r;
}

std::vector<TropicalPoint> YSeedUniversal::principal_parts() const
{
    std::vector<TropicalPoint> r;
    for (auto& f : y_) r.push_back(principal_part(f.numerator(), f.denominator()));
    return r;
}

bool YSeedUniversal::subtraction_free() const
{
    for (auto& f : y_) {
        if (!f.numerator().all_coefficients_nonnegative() || !f.denominator().all_coefficients_nonnegative()) {
            return false;
        }
    }
    return true;
}

bool operator==(const YSeedUniversal& a, const YSeedUniversal& b)
{
    if (!(a.b_ == b.b_)) return false;
    for (std::size_t k = 0; k < a.y_.size(); ++k) {
        if (!(a.y_[k] == b.y_[k])) return false;
    }
    return true;
}

namespace {

TropicalPoint trop_mutated(const TropicalPoint& yi, const TropicalPoint& yk, int bki)
{
    const TropicalPoint one = TropicalPoint::unit(yi.size());
    if (bki > 0) return trop_mul(yi, trop_add(one, yk.inverse()).pow(-bki));
    if (bki < 0) return trop_mul(yi, trop_add(one, yk).pow(-bki));
    return yi;
}

}  // namespace

YSeedTropical YSeedTropical::initial(const ExchangeMatrix& b)
{
    YSeedTropical s;
    s.b_ = b;
    for (int k = 0; k < b.size(); ++k) {
        s.y_.push_back(TropicalPoint::generator(static_cast<std::size_t>(b.size()), static_cast<std::size_t>(k)));
    }
    return s;
}

YSeedTropical YSeedTropical::mutate(const Vertex& kv) const
{
    const int k = b_.index(kv);
    YSeedTropical r = *this;
    r.b_ = b_.mutate(k);
    const TropicalPoint yk = y_[static_cast<std::size_t>(k)];
    for (int i = 0; i < b_.size(); ++i) {
        if (i != k) r.y_[static_cast<std::size_t>(i)] = trop_mutated(y_[static_cast<std::size_t>(i)], yk, b_.b(k, i));
    }
    r.y_[static_cast<std::size_t>(k)] = yk.inverse();
    return r;
}

YSeedTropical YSeedTropical::permute(const VertexPermutation& s) const
{
    YSeedTropical r = *this;
    r.b_ = b_.permuted(s);
    r.y_ = permute_values(b_, y_, s);
    return r;
}

XYSeed XYSeed::initial(const ExchangeMatrix& b)
{
    XYSeed s;
    s.b_ = b;
    std::vector<std::string> names;
    for (auto& v : b.labels()) names.push_back(xname(v));
    for (auto& v : b.labels()) names.push_back(yname(v));
    s.vars_ = make_varset(std::move(names));
    for (int k = 0; k < b.size(); ++k) {
        s.x_.push_back(Poly::variable(s.vars_, k, Rational(1)));
        s.y_.push_back(TropicalPoint::generator(static_cast<std::size_t>(b.size()), static_cast<std::size_t>(k)));
    }
    return s;
}

XYSeed XYSeed::mutate(const Vertex& kv) const
{
    const int k = b_.index(kv);
    XYSeed r = *this;
    r.b_ = b_.mutate(k);
    const Poly one = poly_const(vars_, 1);
    auto [plus, minus] = exchange_monomials(b_, x_, k, one);
    // y_k / (1 (+) y_k) = y^{[a]_+} and 1 / (1 (+) y_k) = y^{[-a]_+} in the tropical semifield.
    const TropicalPoint& yk = y_[static_cast<std::size_t>(k)];
    Exponent ep(static_cast<std::size_t>(vars_->size()), 0), em = ep;
    for (std::size_t t = 0; t < yk.size(); ++t) {
        ep[static_cast<std::size_t>(b_.size()) + t] = std::max(yk[t], 0);
        em[static_cast<std::size_t>(b_.size()) + t] = std::max(-yk[t], 0);
    }
    Poly num = plus * Poly::monomial(vars_, ep, Rational(1)) + minus * Poly::monomial(vars_, em, Rational(1));
    r.x_[static_cast<std::size_t>(k)] = num.exact_divide(x_[static_cast<std::size_t>(k)]);
    for (int i = 0; i < b_.size(); ++i) {
        if (i != k) r.y_[static_cast<std::size_t>(i)] = trop_mutated(y_[static_cast<std::size_t>(i)], yk, b_.b(k, i));
    }
    r.y_[static_cast<std::size_t>(k)] = yk.inverse();
    return r;
}

XYSeed XYSeed::permute(const VertexPermutation& s) const
{
    XYSeed r = *this;
    r.b_ = b_.permuted(s);
    r.x_ = permute_values(b_, x_, s);
    r.y_ = permute_values(b_, y_, s);
    return r;
}

bool operator==(const XYSeed& a, const XYSeed& b) { return a.b_ == b.b_ && a.x_ == b.x_ && a.y_ == b.y_; }

bool check_period(const ExchangeMatrix& b, const MutationWord& w, const VertexPermutation& sigma, SeedKind kind)
{
    switch (kind) {
    case SeedKind::Tropical: {
        auto s = YSeedTropical::initial(b);
        return apply_word(s, w) == s.permute(sigma);
    }
    case SeedKind::Universal: {
        auto s = YSeedUniversal::initial(b);
        return apply_word(s, w) == s.permute(sigma);
    }
    case SeedKind::XY: {
        auto s = XYSeed::initial(b);
        return apply_word(s, w) == s.permute(sigma);
    }
    }
    return false;
}

bool check_pi_compatibility(const ExchangeMatrix& b, const MutationWord& w)
{
    auto u = YSeedUniversal::initial(b);
    auto t = YSeedTropical::initial(b);
    if (u.principal_parts() != t.values()) return false;
    for (auto& st : w.steps()) {
        if (st.kind == Step::Kind::Mutate) {
            u = u.mutate(st.a);
            t = t.mutate(st.a);
        } else {
            auto s = VertexPermutation::transposition(st.a, st.b);
            u = u.permute(s);
            t = t.permute(s);
        }
        if (u.principal_parts() != t.values()) return false;
    }
    return true;
}

namespace {

// Helper binding cycle c of an x- or y-named variable set.
struct Cycles {
    const VarSetPtr& vars;
    int n;
    int c;
    std::string (*name)(const Vertex&);

    bool has(int j) const { return vars->contains(name(Vertex::grid(j, 1))); }
    Poly v(int j, int i, int power = 1) const
    {
        return Poly::variable(vars, vars->index(name(Vertex::grid(j, wrap(i, n)))), Rational(1), power);
    }
    Poly one() const { return poly_const(vars, 1); }
    // Frozen variable of the arrow a -> b, or 1 when absent.
    Poly X(Vertex a, Vertex b) const
    {
        a.i = wrap(a.i, n);
        b.i = wrap(b.i, n);
        std::string nm = name(Vertex::arrow(a, b));
        if (!vars->contains(nm)) return one();
        return Poly::variable(vars, vars->index(nm), Rational(1));
    }
    // prod_{l=a}^{b} f(l) over Z/n with (b-a+1) mod n factors.
    template <class F>
    Poly cyc(int a, int b, F f) const
    {
        Poly r = one();
        const int len = ((b - a + 1) % n + n) % n;
        for (int t = 0; t < len; ++t) r *= f(a + t);
        return r;
    }
};

std::vector<Poly> identity_polys(const VarSetPtr& vars)
{
    std::vector<Poly> r;
    for (int k = 0; k < vars->size(); ++k) r.push_back(Poly::variable(vars, k, Rational(1)));
    return r;
}

void check_cycle_range(const Cycles& C)
{
    if (C.n < 3) throw std::invalid_argument("closed forms need n >= 3");
    if (!C.has(C.c)) throw std::invalid_argument("cycle not present in variable set");
}

// Numerator of R_x(x_i) (independent of i apart from frozen decorations).
Poly rx_numerator(const Cycles& C, int i, bool decorated)
{
    const int c = C.c, n = C.n;
    Poly num(C.vars);
    for (int j = 1; j <= n; ++j) {
        Poly t = C.v(c - 1, j + 1) * C.cyc(j + 2, j - 1, [&](int l) { return C.v(c, l); }) * C.v(c + 1, j);
        if (decorated) {
            auto g = [&](int jj, int ii) { return Vertex::grid(jj, ii); };
            t *= C.X(g(c, j), g(c, j + 1));
            t *= C.cyc(j + 1, i - 1, [&](int l) { return C.X(g(c + 1, l), g(c, l)) * C.X(g(c - 1, l + 1), g(c, l)); });
            t *= C.cyc(i + 1, j, [&](int l) { return C.X(g(c, l), g(c - 1, l)) * C.X(g(c, l), g(c + 1, l - 1)); });
        }
        num += t;
    }
    return num;
}

std::vector<Poly> rx_images(const VarSetPtr& vars, int n, int c, bool decorated)
{
    Cycles C{vars, n, c, xname};
    check_cycle_range(C);
    if (!C.has(c - 1) || !C.has(c + 1)) throw std::invalid_argument("R_x needs both neighbouring cycles");
    auto r = identity_polys(vars);
    for (int i = 1; i <= n; ++i) {
        Poly den = C.cyc(i + 1, i - 1, [&](int l) { return C.v(c, l, -1); });
        r[static_cast<std::size_t>(vars->index(xname(Vertex::grid(c, i))))] = rx_numerator(C, i, decorated) * den;
    }
    if (decorated) {
        auto g = [&](int jj, int ii) { return Vertex::grid(jj, wrap(ii, n)); };
        auto swap_vars = [&](Vertex a, Vertex b) {
            std::string na = xname(a), nb = xname(b);
            bool ha = vars->contains(na), hb = vars->contains(nb);
            if (ha != hb) throw std::invalid_argument("frozen swap partner missing for " + (ha ? na : nb));
            if (!ha) return;
            std::swap(r[static_cast<std::size_t>(vars->index(na))], r[static_cast<std::size_t>(vars->index(nb))]);
        };
        for (int i = 1; i <= n; ++i) {
            swap_vars(Vertex::arrow(g(c + 1, i), g(c, i)), Vertex::arrow(g(c, i + 1), g(c - 1, i + 1)));
            swap_vars(Vertex::arrow(g(c, i), g(c + 1, i - 1)), Vertex::arrow(g(c - 1, i), g(c, i - 1)));
        }
    }
    return r;
}

}  // namespace

std::vector<Poly> closed_R_x(const VarSetPtr& vars, int n, int c) { return rx_images(vars, n, c, false); }

std::vector<Poly> closed_tilde_R(const VarSetPtr& vars, int n, int c) { return rx_images(vars, n, c, true); }

Fraction S_factor(const VarSetPtr& vars, int n, int c)
{
    Cycles C{vars, n, c, xname};
    check_cycle_range(C);
    Poly den = C.one();
    for (int l = 1; l <= n; ++l) den *= C.v(c, l, -1);
    return Fraction(rx_numerator(C, 1, false) * den);
}

Poly intermediate_half(const VarSetPtr& vars, int n, int c, int i)
{
    Cycles C{vars, n, c, xname};
    check_cycle_range(C);
    if (i < 1 || i > n - 2) throw std::invalid_argument("intermediate_half needs 1 <= i <= n-2");
    Poly r = C.v(c - 1, 1) * C.v(c, i + 1) * C.v(c, 1, -1) * C.v(c + 1, n);
    for (int k = 3; k <= i + 2; ++k) {
        r += C.v(c - 1, k - 1) * C.v(c, i + 1) * C.v(c, n) * C.v(c, k - 1, -1) * C.v(c, k - 2, -1) * C.v(c + 1, k - 2);
    }
    return r;
}

Poly alpha_classical(const VarSetPtr& vars, int n, int c, int i)
{
    Cycles C{vars, n, c, yname};
    Poly r = C.one(), mono = C.one();
    for (int k = 1; k <= n - 1; ++k) {
        mono *= C.v(c, i + k - 1);
        r += mono;
    }
    return r;
}

std::vector<Fraction> closed_R_y_classical(const VarSetPtr& vars, int n, int m, int c)
{
    Cycles C{vars, n, c, yname};
    check_cycle_range(C);
    if (c < 0 || c > m) throw std::invalid_argument("cycle index out of range");
    auto r = identity_map(vars);
    auto alpha = [&](int i) { return Fraction::atom(alpha_classical(vars, n, c, i)); };
    auto idx = [&](int j, int i) { return static_cast<std::size_t>(vars->index(yname(Vertex::grid(j, wrap(i, n))))); };
    for (int i = 1; i <= n; ++i) {
        r[idx(c, i)] = alpha(i + 2).inverse() * Fraction(C.v(c, i + 1, -1)) * alpha(i);
        if (c > 0) r[idx(c - 1, i)] = alpha(i).inverse() * Fraction(C.v(c, i) * C.v(c - 1, i)) * alpha(i + 1);
        if (c < m) r[idx(c + 1, i)] = alpha(i + 1).inverse() * Fraction(C.v(c, i + 1) * C.v(c + 1, i)) * alpha(i + 2);
    }
    return r;
}

std::vector<TropicalPoint> closed_R_y_tropical(const ExchangeMatrix& q, int n, int m, int c)
{
    auto t = YSeedTropical::initial(q).values();
    auto g = [&](int j, int i) { return t[static_cast<std::size_t>(q.index(Vertex::grid(j, wrap(i, n))))]; };
    auto r = t;
    auto set = [&](int j, int i, TropicalPoint v) { r[static_cast<std::size_t>(q.index(Vertex::grid(j, wrap(i, n))))] = v; };
    for (int i = 1; i <= n; ++i) {
        set(c, i, g(c, i + 1).inverse());
        if (c > 0) set(c - 1, i, trop_mul(g(c, i), g(c - 1, i)));
        if (c < m) set(c + 1, i, trop_mul(g(c, i + 1), g(c + 1, i)));
    }
    return r;
}

std::vector<Fraction> compose(const std::vector<Fraction>& outer, const std::vector<Fraction>& inner)
{
    std::vector<Fraction> r;
    r.reserve(inner.size());
    for (auto& f : inner) r.push_back(f.substitute(outer));
    return r;
}

std::vector<Fraction> as_fractions(const std::vector<Poly>& images)
{
    return std::vector<Fraction>(images.begin(), images.end());
}

std::vector<Fraction> identity_map(const VarSetPtr& vars) { return as_fractions(identity_polys(vars)); }

}  // namespace clr
