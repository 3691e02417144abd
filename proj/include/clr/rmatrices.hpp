#pragma once

#include <string>
#include <vector>

#include "clr/fraction.hpp"
#include "clr/quiver.hpp"
#include "clr/skew.hpp"

namespace clr {

// Images of all generators of a registry; entry a is the image of generator a.
using SkewMap = std::vector<SkewExpr>;

SkewMap identity_skew(const CommPtr& c);
// outer o inner: generator a goes to inner[a] with outer substituted.
SkewMap compose_skew(const SkewMap& outer, const SkewMap& inner);

// Variables p1..pn, q1..qn and the snake variables qj_i (j = 1..m).
VarSetPtr pq_vars(int n);
VarSetPtr snake_vars(int n, int m);
std::vector<int> var_indices(const VarSetPtr& vars, const std::vector<std::string>& names);
std::vector<std::string> pq_names(int n, char letter);
std::vector<std::string> snake_column_names(int n, int j);

// kappa_i = sum_{j=0}^{n-1} p_{i-1}...p_{i-j} q_{i-j-2}...q_{i-n}; p[k-1], q[k-1]
// are the variable indices of p_k, q_k.
Poly kappa_classical(const VarSetPtr& vars, int n, int i, const std::vector<int>& p, const std::vector<int>& q);

// Geometric R-matrix on the pair (p, q), identity on the other variables.
std::vector<Fraction> geometric_R(const VarSetPtr& vars, int n, const std::vector<int>& p, const std::vector<int>& q);
// R_j on columns j, j+1 of the snake variables.
std::vector<Fraction> geometric_R_snake(const VarSetPtr& vars, int n, int j);
Fraction geometric_R_apply(const VarSetPtr& vars, int n, int j, const Fraction& f);

// Quantum geometric R-matrix on (p, q) given as generator indices.
SkewMap quantum_geometric_R(const CommPtr& c, int n, const std::vector<int>& p, const std::vector<int>& q);
SkewMap quantum_geometric_R_pq(const CommPtr& c, int n);
SkewMap quantum_geometric_R_snake(const CommPtr& c, int n, int j);

// Quantum y-seed: generator images over the initial torus lambda_y(B).
class QuantumYSeed {
public:
    static QuantumYSeed initial(const ExchangeMatrix& b);

    const ExchangeMatrix& matrix() const { return b_; }
    const CommPtr& comm() const { return comm_; }
    const SkewMap& values() const { return y_; }
    const SkewExpr& y(const Vertex& v) const { return y_.at(static_cast<std::size_t>(b_.index(v))); }

    QuantumYSeed mutate(const Vertex& k) const;
    QuantumYSeed permute(const VertexPermutation& s) const;

private:
    ExchangeMatrix b_;
    CommPtr comm_;
    SkewMap y_;
};

// One quantum mutation at k as a substitution over lambda_y(b).
SkewMap quantum_y_mutation(const ExchangeMatrix& b, const Vertex& k);

// Closed form of the quantum cluster R-matrix R_{M_c} on the y-torus c.
// Generators are named yname(j:i); neighbouring cycles are updated only when
// present in c.
SkewMap quantum_cluster_R_y(const CommPtr& c, int n, int cyc);
// The same map obtained by running the R-sequence word through quantum mutations.
SkewMap quantum_cluster_R_y_mutations(const ExchangeMatrix& q, int n, int cyc, int j = 1);

// Torus of y_{j,i}, j = 1..m-1, as a sub-torus of lambda_y(Q_{n,m}).
CommPtr lambda_y_interior(int n, int m);
// y_{j,i} -> eps^{-1} q_{j,i}^{-1} q_{j+1,i-1}; y is lambda_y_interior(n,m), q is lambda_snake(n,m).
SkewMap phi_eps(const CommPtr& y, const CommPtr& q, int n);
// The same map at eps = 1 as Laurent monomials over the snake variables.
std::vector<Poly> phi_classical(const VarSetPtr& yvars, const VarSetPtr& qvars, int n);

// Variables of the enriched quiver with the X_{i,i+1} and X_{i,i^-} removed.
VarSetPtr tilde_prime_vars(int n, int m);
// iota: Q(p,q) -> F(Q~'_{n,2}); pq is pq_vars(n), x is tilde_prime_vars(n, 2).
std::vector<Poly> iota(const VarSetPtr& pq, const VarSetPtr& x, int n);
// iota_m: Q(N_{n,m}) -> F(Q~'_{n,m}); snake is snake_vars(n,m), x is tilde_prime_vars(n,m).
std::vector<Poly> iota_m(const VarSetPtr& snake, const VarSetPtr& x, int n, int m);
// iota(kappa_i) in the collected form x_i^2/(x_i^- x_i^+) * sum(...).
Poly iota_kappa_closed(const VarSetPtr& x, int n, int i);
// iota_m o phi (y_{j,i}) as a single Laurent monomial in x and X.
Poly y_in_xX(const VarSetPtr& x, int n, int j, int i);
// prod_u x_u^{b_uv} over all vertices u of the quiver.
Poly x_monomial_of_column(const ExchangeMatrix& b, const VarSetPtr& x, const Vertex& v);

// Identities a[g] = b[g] for every generator g where the two images differ structurally.
std::vector<std::pair<SkewExpr, SkewExpr>> map_identities(const SkewMap& a, const SkewMap& b);
// f(a) f(b) = eps^{lambda(a,b)} f(b) f(a) for all pairs a < b of gens, lambda taken from src.
std::vector<std::pair<SkewExpr, SkewExpr>> commutation_identities(const CommutationMatrix& src, const SkewMap& f,
                                                                  const std::vector<int>& gens);

}  // namespace clr
