#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "clr/eps.hpp"
#include "clr/laurent.hpp"
#include "clr/quiver.hpp"

namespace clr {

// Generators g_a with g_a g_b = eps^{lambda(a,b)} g_b g_a.  Registry order is
// the canonical normal order.
class CommutationMatrix {
public:
    CommutationMatrix(std::vector<std::string> names, std::vector<int> lambda);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int a) const { return names_.at(static_cast<std::size_t>(a)); }
    const std::vector<std::string>& names() const { return names_; }
    bool contains(const std::string& n) const { return index_.count(n) != 0; }
    int index(const std::string& n) const;
    int lambda(int a, int b) const { return lam_[static_cast<std::size_t>(a * size() + b)]; }
    const std::vector<int>& matrix() const { return lam_; }

    // Sub-torus on the given generators (in the given order).
    std::shared_ptr<const CommutationMatrix> restricted(const std::vector<int>& keep) const;

    friend bool operator==(const CommutationMatrix& a, const CommutationMatrix& b)
    {
        return a.names_ == b.names_ && a.lam_ == b.lam_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<int> lam_;
};

using CommPtr = std::shared_ptr<const CommutationMatrix>;

// eps^k times the normal-ordered product of g_a^{e_a}.
struct NCMonomial {
    int eps = 0;
    Exponent e;

    friend bool operator==(const NCMonomial&, const NCMonomial&) = default;
};

// m m' = eps^{alpha(m,m')} m' m.
int alpha_exponent(const CommutationMatrix& c, const Exponent& a, const Exponent& b);
NCMonomial mono_mul(const CommutationMatrix& c, const NCMonomial& a, const NCMonomial& b);
NCMonomial mono_inverse(const CommutationMatrix& c, const NCMonomial& a);

struct RegistryMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Noncommutative Laurent polynomial over Z[eps^{+-1}] in normal-ordered monomials.
class NCLaurent {
public:
    using Terms = std::map<Exponent, EpsScalar>;

    NCLaurent() = default;
    explicit NCLaurent(CommPtr c) : comm_(std::move(c)) {}
    static NCLaurent constant(CommPtr c, const EpsScalar& s);
    static NCLaurent generator(CommPtr c, int a, int power = 1);
    static NCLaurent generator(CommPtr c, const std::string& name, int power = 1);
    static NCLaurent monomial(CommPtr c, const NCMonomial& m);
    // Ordered product of g_a^{k} factors.
    static NCLaurent word(CommPtr c, const std::vector<std::pair<int, int>>& factors);

    const CommPtr& comm() const { return comm_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // Single term with monomial coefficient c*eps^k.
    bool is_monomial() const;

    void add_term(const Exponent& e, const EpsScalar& c);
    NCLaurent& operator+=(const NCLaurent& o);
    NCLaurent& operator-=(const NCLaurent& o);
    friend NCLaurent operator+(NCLaurent a, const NCLaurent& b) { return a += b; }
    friend NCLaurent operator-(NCLaurent a, const NCLaurent& b) { return a -= b; }
    friend NCLaurent operator-(const NCLaurent& a);
    friend NCLaurent operator*(const NCLaurent& a, const NCLaurent& b);
    NCLaurent scaled(const EpsScalar& s) const;
    friend bool operator==(const NCLaurent& a, const NCLaurent& b) { return a.terms_ == b.terms_; }

    // Commutative shadow at eps = 1 over the given variables (names must match).
    Poly at_eps_one(const VarSetPtr& vars) const;
    // Generators with a nonzero exponent somewhere.
    std::vector<int> support() const;

    std::string str() const;

private:
    void check(const NCLaurent& o) const;

    CommPtr comm_;
    Terms terms_;
};

// x P x^{-1}.
NCLaurent conjugate_by_monomial(const NCLaurent& p, const NCMonomial& x);

// Commutation data of the three tori.
// p_i, q_i with names p1..pn, q1..qn.
CommPtr lambda_pq(int n);
// q_{j,i} named qj_i, registry order (j, i).
CommPtr lambda_snake(int n, int m);
// y_v for every vertex of B, lambda(u,v) = 2 b_{vu}.
CommPtr lambda_y(const ExchangeMatrix& b);

std::string snake_name(int j, int i);

// kappa_i^eps = sum_{j=0}^{n-1} p_{i-1}...p_{i-j} q_{i-j-2}...q_{i-n}; p[k-1] and
// q[k-1] are the generator indices of p_k and q_k.
NCLaurent kappa_eps(const CommPtr& c, int n, int i, const std::vector<int>& p, const std::vector<int>& q);
// alpha_i^eps = 1 + sum_{k=1}^{n-1} eps^k y_i ... y_{i+k-1}; y[k-1] is y_k.
NCLaurent alpha_eps(const CommPtr& c, int n, int i, const std::vector<int>& y);

// Generator indices of column j of the snake torus, and of p / q in lambda_pq.
std::vector<int> snake_column(const CommutationMatrix& c, int n, int j);
std::vector<int> pq_indices(const CommutationMatrix& c, int n, char letter);

}  // namespace clr
