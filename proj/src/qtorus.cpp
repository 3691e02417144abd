#include "clr/qtorus.hpp"

#include <sstream>
#include <stdexcept>

namespace clr {

CommutationMatrix::CommutationMatrix(std::vector<std::string> names, std::vector<int> lambda)
    : names_(std::move(names)), lam_(std::move(lambda))
{
    const std::size_t n = names_.size();
    if (lam_.size() != n * n) throw std::invalid_argument("commutation matrix has wrong size");
    for (std::size_t i = 0; i < n; ++i) {
        if (!index_.emplace(names_[i], static_cast<int>(i)).second) {
            throw std::invalid_argument("duplicate generator " + names_[i]);
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (lam_[i * n + j] != -lam_[j * n + i]) throw std::invalid_argument("commutation matrix is not skew");
        }
    }
}

int CommutationMatrix::index(const std::string& n) const
{
    auto it = index_.find(n);
    if (it == index_.end()) throw std::out_of_range("unknown generator " + n);
    return it->second;
}

CommPtr CommutationMatrix::restricted(const std::vector<int>& keep) const
{
    std::vector<std::string> nm;
    std::vector<int> lam;
    for (int a : keep) nm.push_back(name(a));
    for (int a : keep) {
        for (int b : keep) lam.push_back(lambda(a, b));
    }
    return std::make_shared<const CommutationMatrix>(std::move(nm), std::move(lam));
}

int alpha_exponent(const CommutationMatrix& c, const Exponent& a, const Exponent& b)
{
    int s = 0;
    const int n = c.size();
    for (int k = 0; k < n; ++k) {
        if (!a[static_cast<std::size_t>(k)]) continue;
        for (int l = 0; l < n; ++l) s += a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(l)] * c.lambda(k, l);
    }
    return s;
}

namespace {

// Exponent of eps picked up when x^a x^b is put in normal order.
int reorder_exponent(const CommutationMatrix& c, const Exponent& a, const Exponent& b)
{
    int s = 0;
    const int n = c.size();
    for (int l = 1; l < n; ++l) {
        int al = a[static_cast<std::size_t>(l)];
        if (!al) continue;
        for (int k = 0; k < l; ++k) s += c.lambda(l, k) * al * b[static_cast<std::size_t>(k)];
    }
    return s;
}

Exponent add_exp(const Exponent& a, const Exponent& b)
{
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

}  // namespace

NCMonomial mono_mul(const CommutationMatrix& c, const NCMonomial& a, const NCMonomial& b)
{
    return {a.eps + b.eps + reorder_exponent(c, a.e, b.e), add_exp(a.e, b.e)};
}

NCMonomial mono_inverse(const CommutationMatrix& c, const NCMonomial& a)
{
    Exponent neg(a.e.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -a.e[i];
    NCMonomial t = mono_mul(c, a, {0, neg});
    return {-t.eps, neg};
}

NCLaurent NCLaurent::constant(CommPtr c, const EpsScalar& s)
{
    NCLaurent r(std::move(c));
    r.add_term(Exponent(static_cast<std::size_t>(r.comm_->size()), 0), s);
    return r;
}

NCLaurent NCLaurent::generator(CommPtr c, int a, int power)
{
    Exponent e(static_cast<std::size_t>(c->size()), 0);
    e.at(static_cast<std::size_t>(a)) = power;
    NCLaurent r(std::move(c));
    r.add_term(e, EpsScalar(1));
    return r;
}

NCLaurent NCLaurent::generator(CommPtr c, const std::string& name, int power)
{
    int a = c->index(name);
    return generator(std::move(c), a, power);
}

NCLaurent NCLaurent::monomial(CommPtr c, const NCMonomial& m)
{
    NCLaurent r(std::move(c));
    r.add_term(m.e, EpsScalar::eps_pow(m.eps));
    return r;
}

NCLaurent NCLaurent::word(CommPtr c, const std::vector<std::pair<int, int>>& factors)
{
    NCMonomial m{0, Exponent(static_cast<std::size_t>(c->size()), 0)};
    for (auto [a, k] : factors) {
        NCMonomial g{0, Exponent(static_cast<std::size_t>(c->size()), 0)};
        g.e.at(static_cast<std::size_t>(a)) = k;
        m = mono_mul(*c, m, g);
    }
    return monomial(std::move(c), m);
}

bool NCLaurent::is_monomial() const
{
    return terms_.size() == 1 && terms_.begin()->second.is_monomial();
}

void NCLaurent::add_term(const Exponent& e, const EpsScalar& c)
{
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void NCLaurent::check(const NCLaurent& o) const
{
    if (comm_ && o.comm_ && comm_ != o.comm_ && !(*comm_ == *o.comm_)) {
        throw RegistryMismatch("noncommutative polynomials over different generator registries");
    }
}

NCLaurent& NCLaurent::operator+=(const NCLaurent& o)
{
    check(o);
    if (!comm_) comm_ = o.comm_;
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

NCLaurent& NCLaurent::operator-=(const NCLaurent& o)
{
    check(o);
    if (!comm_) comm_ = o.comm_;
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

NCLaurent operator-(const NCLaurent& a)
{
    NCLaurent r(a.comm_);
    for (auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
}

NCLaurent operator*(const NCLaurent& a, const NCLaurent& b)
{
    a.check(b);
    NCLaurent r(a.comm_ ? a.comm_ : b.comm_);
    for (auto& [ea, ca] : a.terms_) {
        for (auto& [eb, cb] : b.terms_) {
            int s = reorder_exponent(*r.comm_, ea, eb);
            r.add_term(add_exp(ea, eb), (ca * cb).shifted(s));
        }
    }
    return r;
}

NCLaurent NCLaurent::scaled(const EpsScalar& s) const
{
    NCLaurent r(comm_);
    if (s.is_zero()) return r;
    for (auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

Poly NCLaurent::at_eps_one(const VarSetPtr& vars) const
{
    Poly r(vars);
    for (auto& [e, c] : terms_) {
        Exponent f(static_cast<std::size_t>(vars->size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i]) f[static_cast<std::size_t>(vars->index(comm_->name(static_cast<int>(i))))] += e[i];
        }
        r.add_term(f, Rational(c.at_one()));
    }
    return r;
}

std::vector<int> NCLaurent::support() const
{
    std::vector<int> r;
    if (!comm_) return r;
    for (int a = 0; a < comm_->size(); ++a) {
        for (auto& t : terms_) {
            if (t.first[static_cast<std::size_t>(a)]) {
                r.push_back(a);
                break;
            }
        }
    }
    return r;
}

std::string NCLaurent::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool unit = c == EpsScalar(1);
        bool constant = true;
        for (int x : e) constant = constant && x == 0;
        if (!unit || constant) os << "(" << c.str() << ")";
        bool sep = !unit || constant;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (sep) os << "*";
            sep = true;
            os << comm_->name(static_cast<int>(i));
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

NCLaurent conjugate_by_monomial(const NCLaurent& p, const NCMonomial& x)
{
    NCLaurent r(p.comm());
    for (auto& [e, c] : p.terms()) r.add_term(e, c.shifted(alpha_exponent(*p.comm(), x.e, e)));
    return r;
}

CommPtr lambda_pq(int n)
{
    if (n < 3) throw std::invalid_argument("lambda_pq needs n >= 3");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
    const int N = 2 * n;
    std::vector<int> lam(static_cast<std::size_t>(N * N), 0);
    auto set = [&](int a, int b, int v) {
        lam[static_cast<std::size_t>(a * N + b)] = v;
        lam[static_cast<std::size_t>(b * N + a)] = -v;
    };
    for (int i = 1; i <= n; ++i) {
        int p = i - 1, q = n + i - 1;
        set(p, n + wrap(i - 2, n) - 1, 1);
        set(p, q, 1);
        set(p, n + wrap(i - 1, n) - 1, -2);
        set(p, wrap(i - 1, n) - 1, 1);
        set(q, n + wrap(i - 1, n) - 1, 1);
    }
    return std::make_shared<const CommutationMatrix>(std::move(names), std::move(lam));
}

std::string snake_name(int j, int i) { return "q" + std::to_string(j) + "_" + std::to_string(i); }

CommPtr lambda_snake(int n, int m)
{
    if (n < 3) throw std::invalid_argument("lambda_snake needs n >= 3");
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> gens;
    for (int j = 1; j <= m; ++j) {
        for (int i = 1; i <= n; ++i) {
            names.push_back(snake_name(j, i));
            gens.push_back({j, i});
        }
    }
    const int N = n * m;
    std::vector<int> lam(static_cast<std::size_t>(N * N), 0);
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            auto [ja, ia] = gens[static_cast<std::size_t>(a)];
            auto [jb, ib] = gens[static_cast<std::size_t>(b)];
            int d = ((ia + ja) - (ib + jb)) % n;
            if (d < 0) d += n;
            int v = 0;
            if (d == 1) v = ja <= jb ? 1 : -1;
            else if (d == n - 1) v = jb <= ja ? -1 : 1;
            else if (d == 0 && a != b) v = ja < jb ? -2 : 2;
            lam[static_cast<std::size_t>(a * N + b)] = v;
        }
    }
    return std::make_shared<const CommutationMatrix>(std::move(names), std::move(lam));
}

CommPtr lambda_y(const ExchangeMatrix& b)
{
    const int N = b.size();
    std::vector<std::string> names;
    for (auto& v : b.labels()) names.push_back("y" + v.str());
    std::vector<int> lam(static_cast<std::size_t>(N * N));
    for (int u = 0; u < N; ++u) {
        for (int v = 0; v < N; ++v) lam[static_cast<std::size_t>(u * N + v)] = 2 * b.b(v, u);
    }
    return std::make_shared<const CommutationMatrix>(std::move(names), std::move(lam));
}

NCLaurent kappa_eps(const CommPtr& c, int n, int i, const std::vector<int>& p, const std::vector<int>& q)
{
    auto P = [&](int k) { return p.at(static_cast<std::size_t>(wrap(k, n) - 1)); };
    auto Q = [&](int k) { return q.at(static_cast<std::size_t>(wrap(k, n) - 1)); };
    NCLaurent r(c);
    for (int j = 0; j <= n - 1; ++j) {
        std::vector<std::pair<int, int>> w;
        for (int k = 1; k <= j; ++k) w.push_back({P(i - k), 1});
        for (int k = j + 2; k <= n; ++k) w.push_back({Q(i - k), 1});
        r += NCLaurent::word(c, w);
    }
    return r;
}

NCLaurent alpha_eps(const CommPtr& c, int n, int i, const std::vector<int>& y)
{
    NCLaurent r = NCLaurent::constant(c, EpsScalar(1));
    std::vector<std::pair<int, int>> w;
    for (int k = 1; k <= n - 1; ++k) {
        w.push_back({y.at(static_cast<std::size_t>(wrap(i + k - 1, n) - 1)), 1});
        r += NCLaurent::word(c, w).scaled(EpsScalar::eps_pow(k));
    }
    return r;
}

std::vector<int> snake_column(const CommutationMatrix& c, int n, int j)
{
    std::vector<int> r;
    for (int i = 1; i <= n; ++i) r.push_back(c.index(snake_name(j, i)));
    return r;
}

std::vector<int> pq_indices(const CommutationMatrix& c, int n, char letter)
{
    std::vector<int> r;
    for (int i = 1; i <= n; ++i) r.push_back(c.index(std::string(1, letter) + std::to_string(i)));
    return r;
}

}  // namespace clr
