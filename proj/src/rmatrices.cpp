#include "clr/rmatrices.hpp"

#include <stdexcept>

#include "clr/seeds.hpp"

namespace clr {

namespace {

std::size_t uz(int a) { return static_cast<std::size_t>(a); }

Vertex grid(int j, int i, int n) { return Vertex::grid(j, wrap(i, n)); }

}  // namespace

SkewMap identity_skew(const CommPtr& c)
{
    SkewMap r;
    for (int a = 0; a < c->size(); ++a) r.push_back(SkewExpr::gen(c, a));
    return r;
}

SkewMap compose_skew(const SkewMap& outer, const SkewMap& inner) { return substitute_all(inner, outer); }

std::vector<std::string> pq_names(int n, char letter)
{
    std::vector<std::string> r;
    for (int i = 1; i <= n; ++i) r.push_back(std::string(1, letter) + std::to_string(i));
    return r;
}

std::vector<std::string> snake_column_names(int n, int j)
{
    std::vector<std::string> r;
    for (int i = 1; i <= n; ++i) r.push_back(snake_name(j, i));
    return r;
}

VarSetPtr pq_vars(int n)
{
    auto names = pq_names(n, 'p');
    for (auto& s : pq_names(n, 'q')) names.push_back(s);
    return make_varset(std::move(names));
}

VarSetPtr snake_vars(int n, int m)
{
    std::vector<std::string> names;
    for (int j = 1; j <= m; ++j) {
        for (auto& s : snake_column_names(n, j)) names.push_back(s);
    }
    return make_varset(std::move(names));
}

std::vector<int> var_indices(const VarSetPtr& vars, const std::vector<std::string>& names)
{
    std::vector<int> r;
    for (auto& s : names) r.push_back(vars->index(s));
    return r;
}

Poly kappa_classical(const VarSetPtr& vars, int n, int i, const std::vector<int>& p, const std::vector<int>& q)
{
    auto var = [&](const std::vector<int>& v, int k) { return Poly::variable(vars, v.at(uz(wrap(k, n) - 1)), Rational(1)); };
    Poly r(vars);
    for (int j = 0; j < n; ++j) {
        Poly t = poly_const(vars, 1);
        for (int l = 1; l <= j; ++l) t *= var(p, i - l);
        for (int l = j + 2; l <= n; ++l) t *= var(q, i - l);
        r += t;
    }
    return r;
}

std::vector<Fraction> geometric_R(const VarSetPtr& vars, int n, const std::vector<int>& p, const std::vector<int>& q)
{
    if (n < 2) throw std::invalid_argument("geometric R needs n >= 2");
    auto r = identity_map(vars);
    std::vector<Fraction> kap;
    for (int i = 1; i <= n; ++i) kap.push_back(Fraction::atom(kappa_classical(vars, n, i, p, q)));
    auto K = [&](int i) { return kap[uz(wrap(i, n) - 1)]; };
    for (int i = 1; i <= n; ++i) {
        Fraction pi = Poly::variable(vars, p[uz(i - 1)], Rational(1));
        Fraction qi = Poly::variable(vars, q[uz(i - 1)], Rational(1));
        r[uz(p[uz(i - 1)])] = qi * K(i + 1) / K(i);
        r[uz(q[uz(i - 1)])] = pi * K(i) / K(i + 1);
    }
    return r;
}

std::vector<Fraction> geometric_R_snake(const VarSetPtr& vars, int n, int j)
{
    return geometric_R(vars, n, var_indices(vars, snake_column_names(n, j)), var_indices(vars, snake_column_names(n, j + 1)));
}

Fraction geometric_R_apply(const VarSetPtr& vars, int n, int j, const Fraction& f)
{
    return f.substitute(geometric_R_snake(vars, n, j));
}

SkewMap quantum_geometric_R(const CommPtr& c, int n, const std::vector<int>& p, const std::vector<int>& q)
{
    if (n < 3) throw std::invalid_argument("quantum geometric R needs n >= 3");
    auto r = identity_skew(c);
    std::vector<SkewExpr> kap, kinv;
    for (int i = 1; i <= n; ++i) {
        kap.push_back(SkewExpr::poly(kappa_eps(c, n, i, p, q)));
        kinv.push_back(kap.back().inv());
    }
    auto K = [&](int i) { return kap[uz(wrap(i, n) - 1)]; };
    auto Ki = [&](int i) { return kinv[uz(wrap(i, n) - 1)]; };
    for (int i = 1; i <= n; ++i) {
        const int pi = p[uz(i - 1)], qi = q[uz(i - 1)];
        r[uz(pi)] = SkewExpr::product({Ki(i), SkewExpr::gen(c, qi), K(i + 1)});
        r[uz(qi)] = SkewExpr::product({Ki(i + 1), SkewExpr::gen(c, pi), K(i)});
    }
    return r;
}

SkewMap quantum_geometric_R_pq(const CommPtr& c, int n)
{
    return quantum_geometric_R(c, n, pq_indices(*c, n, 'p'), pq_indices(*c, n, 'q'));
}

SkewMap quantum_geometric_R_snake(const CommPtr& c, int n, int j)
{
    return quantum_geometric_R(c, n, snake_column(*c, n, j), snake_column(*c, n, j + 1));
}

QuantumYSeed QuantumYSeed::initial(const ExchangeMatrix& b)
{
    QuantumYSeed s;
    s.b_ = b;
    s.comm_ = lambda_y(b);
    s.y_ = identity_skew(s.comm_);
    return s;
}

QuantumYSeed QuantumYSeed::mutate(const Vertex& kv) const
{
    const int k = b_.index(kv);
    if (b_.is_frozen(k)) throw FrozenVertexError("cannot mutate at frozen vertex " + kv.str());
    QuantumYSeed r = *this;
    r.b_ = b_.mutate(k);
    const SkewExpr& yk = y_[uz(k)];
    const SkewExpr ykinv = yk.inv();
    const SkewExpr one = SkewExpr::constant(comm_, 1);
    // 1 + eps^{2m-1} y_k^{-1} and 1 + eps^{2m-1} y_k.
    auto down = [&](int m) { return one + SkewExpr::eps_pow(comm_, 2 * m - 1) * ykinv; };
    auto up = [&](int m) { return one + SkewExpr::eps_pow(comm_, 2 * m - 1) * yk; };
    for (int i = 0; i < b_.size(); ++i) {
        if (i == k) continue;
        const int bki = b_.b(k, i);
        if (bki == 0) continue;
        std::vector<SkewExpr> f{y_[uz(i)]};
        for (int m = 1; m <= (bki > 0 ? bki : -bki); ++m) f.push_back(bki > 0 ? down(m).inv() : up(m));
        r.y_[uz(i)] = SkewExpr::product(f);
    }
    r.y_[uz(k)] = ykinv;
    return r;
}

QuantumYSeed QuantumYSeed::permute(const VertexPermutation& s) const
{
    QuantumYSeed r = *this;
    r.b_ = b_.permuted(s);
    for (int u = 0; u < b_.size(); ++u) r.y_[uz(b_.index(s(b_.label(u))))] = y_[uz(u)];
    return r;
}

SkewMap quantum_y_mutation(const ExchangeMatrix& b, const Vertex& k) { return QuantumYSeed::initial(b).mutate(k).values(); }

SkewMap quantum_cluster_R_y(const CommPtr& c, int n, int cyc)
{
    if (n < 3) throw std::invalid_argument("quantum cluster R needs n >= 3");
    auto has = [&](int j) { return c->contains(yname(grid(j, 1, n))); };
    if (!has(cyc)) throw std::invalid_argument("cycle missing from the y-torus");
    auto idx = [&](int j, int i) { return c->index(yname(grid(j, i, n))); };
    std::vector<int> col;
    for (int i = 1; i <= n; ++i) col.push_back(idx(cyc, i));
    std::vector<SkewExpr> al, alinv;
    for (int i = 1; i <= n; ++i) {
        al.push_back(SkewExpr::poly(alpha_eps(c, n, i, col)));
        alinv.push_back(al.back().inv());
    }
    auto A = [&](int i) { return al[uz(wrap(i, n) - 1)]; };
    auto Ai = [&](int i) { return alinv[uz(wrap(i, n) - 1)]; };
    auto eps_pair = [&](int a, int b) {
        return SkewExpr::poly(NCLaurent::word(c, {{a, 1}, {b, 1}}).scaled(EpsScalar::eps_pow(1)));
    };

    auto r = identity_skew(c);
    for (int i = 1; i <= n; ++i) {
        r[uz(idx(cyc, i))] = SkewExpr::product({Ai(i + 2), SkewExpr::gen(c, idx(cyc, i + 1)).inv(), A(i)});
        if (has(cyc - 1)) r[uz(idx(cyc - 1, i))] = SkewExpr::product({Ai(i), eps_pair(idx(cyc, i), idx(cyc - 1, i)), A(i + 1)});
        if (has(cyc + 1)) r[uz(idx(cyc + 1, i))] = SkewExpr::product({Ai(i + 1), eps_pair(idx(cyc, i + 1), idx(cyc + 1, i)), A(i + 2)});
    }
    return r;
}

SkewMap quantum_cluster_R_y_mutations(const ExchangeMatrix& q, int n, int cyc, int j)
{
    auto s = apply_word(QuantumYSeed::initial(q), r_sequence_word(n, cyc, j));
    if (!(s.matrix() == q)) throw std::logic_error("R-sequence did not return to the initial quiver");
    return s.values();
}

CommPtr lambda_y_interior(int n, int m)
{
    auto q = build_Q(n, m);
    std::vector<Vertex> keep;
    for (auto& v : q.labels()) {
        if (v.j >= 1 && v.j <= m - 1) keep.push_back(v);
    }
    return lambda_y(q.restricted(keep));
}

SkewMap phi_eps(const CommPtr& y, const CommPtr& q, int n)
{
    SkewMap r;
    for (int a = 0; a < y->size(); ++a) {
        Vertex v = Vertex::parse(y->name(a).substr(1));
        auto w = NCLaurent::word(q, {{q->index(snake_name(v.j, v.i)), -1}, {q->index(snake_name(v.j + 1, wrap(v.i - 1, n))), 1}});
        r.push_back(SkewExpr::poly(w.scaled(EpsScalar::eps_pow(-1))));
    }
    return r;
}

std::vector<Poly> phi_classical(const VarSetPtr& yvars, const VarSetPtr& qvars, int n)
{
    std::vector<Poly> r;
    for (auto& name : yvars->names()) {
        Vertex v = Vertex::parse(name.substr(1));
        r.push_back(poly_var(qvars, snake_name(v.j, v.i), -1) * poly_var(qvars, snake_name(v.j + 1, wrap(v.i - 1, n))));
    }
    return r;
}

VarSetPtr tilde_prime_vars(int n, int m)
{
    const ExchangeMatrix q = build_Q_tilde_prime(n, m);
    std::vector<std::string> names;
    for (auto& v : q.labels()) names.push_back(xname(v));
    return make_varset(std::move(names));
}

namespace {

Poly xv(const VarSetPtr& x, int n, int j, int i, int power = 1) { return poly_var(x, xname(grid(j, i, n)), power); }

// X for the arrow (ja,ia) -> (jb,ib).
Poly Xv(const VarSetPtr& x, int n, int ja, int ia, int jb, int ib, int power = 1)
{
    return poly_var(x, xname(Vertex::arrow(grid(ja, ia, n), grid(jb, ib, n))), power);
}

// iota_m(q_{j,i}).
Poly iota_image(const VarSetPtr& x, int n, int j, int i)
{
    return xv(x, n, j - 1, i) * xv(x, n, j, i + 1) * xv(x, n, j - 1, i + 1, -1) * xv(x, n, j, i, -1) * Xv(x, n, j - 1, i + 1, j, i);
}

}  // namespace

std::vector<Poly> iota(const VarSetPtr& pq, const VarSetPtr& x, int n)
{
    std::vector<Poly> r(uz(pq->size()));
    for (int i = 1; i <= n; ++i) {
        r[uz(pq->index("p" + std::to_string(i)))] = iota_image(x, n, 1, i);
        r[uz(pq->index("q" + std::to_string(i)))] = iota_image(x, n, 2, i);
    }
    return r;
}

std::vector<Poly> iota_m(const VarSetPtr& snake, const VarSetPtr& x, int n, int m)
{
    std::vector<Poly> r(uz(snake->size()));
    for (int j = 1; j <= m; ++j) {
        for (int i = 1; i <= n; ++i) r[uz(snake->index(snake_name(j, i)))] = iota_image(x, n, j, i);
    }
    return r;
}

Poly iota_kappa_closed(const VarSetPtr& x, int n, int i)
{
    Poly sum(x);
    for (int j = 0; j < n; ++j) {
        Poly t = xv(x, n, 0, i - j) * xv(x, n, 2, i - j - 1) * xv(x, n, 1, i - j, -1) * xv(x, n, 1, i - j - 1, -1);
        for (int l = 1; l <= j; ++l) t *= Xv(x, n, 0, i + 1 - l, 1, i - l);
        for (int l = j + 2; l <= n; ++l) t *= Xv(x, n, 1, i + 1 - l, 2, i - l);
        sum += t;
    }
    return xv(x, n, 1, i, 2) * xv(x, n, 0, i, -1) * xv(x, n, 2, i, -1) * sum;
}

Poly y_in_xX(const VarSetPtr& x, int n, int j, int i)
{
    return xv(x, n, j - 1, i + 1) * xv(x, n, j, i - 1) * xv(x, n, j + 1, i) * xv(x, n, j - 1, i, -1) * xv(x, n, j, i + 1, -1) *
           xv(x, n, j + 1, i - 1, -1) * Xv(x, n, j, i, j + 1, i - 1) * Xv(x, n, j - 1, i + 1, j, i, -1);
}

Poly x_monomial_of_column(const ExchangeMatrix& b, const VarSetPtr& x, const Vertex& v)
{
    Poly r = poly_const(x, 1);
    for (int u = 0; u < b.size(); ++u) {
        const int e = b.b(u, b.index(v));
        if (e) r *= poly_var(x, xname(b.label(u)), e);
    }
    return r;
}

std::vector<std::pair<SkewExpr, SkewExpr>> map_identities(const SkewMap& a, const SkewMap& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("maps of different length");
    std::vector<std::pair<SkewExpr, SkewExpr>> r;
    for (std::size_t g = 0; g < a.size(); ++g) {
        if (!structurally_equal(a[g], b[g])) r.push_back({a[g], b[g]});
    }
    return r;
}

std::vector<std::pair<SkewExpr, SkewExpr>> commutation_identities(const CommutationMatrix& src, const SkewMap& f, const std::vector<int>& gens)
{
    std::vector<std::pair<SkewExpr, SkewExpr>> r;
    for (std::size_t s = 0; s < gens.size(); ++s) {
        for (std::size_t t = s + 1; t < gens.size(); ++t) {
            const int a = gens[s], b = gens[t];
            const SkewExpr& fa = f.at(uz(a));
            const SkewExpr& fb = f.at(uz(b));
            const int lam = src.lambda(a, b);
            r.push_back({fa * fb, SkewExpr::product({SkewExpr::eps_pow(fa.comm(), lam), fb, fa})});
        }
    }
    return r;
}

}  // namespace clr
