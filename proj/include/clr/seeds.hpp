#pragma once

#include <string>
#include <vector>

#include "clr/fraction.hpp"
#include "clr/quiver.hpp"
#include "clr/tropical.hpp"

namespace clr {

// One step of a mutation word: a mutation at a, or the transposition of a and b.
struct Step {
    enum class Kind { Mutate, Swap };
    Kind kind = Kind::Mutate;
    Vertex a;
    Vertex b;

    friend bool operator==(const Step&, const Step&) = default;
};

// Steps are applied left to right (execution order).
class MutationWord {
public:
    MutationWord() = default;

    MutationWord& mu(Vertex v);
    MutationWord& swap(Vertex a, Vertex b);
    MutationWord& append(const MutationWord& w);

    const std::vector<Step>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    std::size_t size() const { return steps_.size(); }
    MutationWord inverse() const;

    // "mu(1:2), swap(1:3,1:1)".
    std::string str() const;
    static MutationWord parse(const std::string& text);

    friend bool operator==(const MutationWord&, const MutationWord&) = default;

private:
    std::vector<Step> steps_;
};

// The word realizing R_{M_c} starting at position j on cycle c of Q_{n,m}.
// When q is given, the frozen-label swaps of the enriched version are appended
// for every frozen vertex present in q.
MutationWord r_sequence_word(int n, int c, int j, const ExchangeMatrix* q = nullptr);

std::string xname(const Vertex& v);
std::string yname(const Vertex& v);

// Cluster variables as Laurent polynomials in the initial cluster.
class XSeed {
public:
    static XSeed initial(const ExchangeMatrix& b);

    const ExchangeMatrix& matrix() const { return b_; }
    const VarSetPtr& vars() const { return vars_; }
    const std::vector<Poly>& cluster() const { return x_; }
    const Poly& x(const Vertex& v) const { return x_.at(static_cast<std::size_t>(b_.index(v))); }

    XSeed mutate(const Vertex& k) const;
    XSeed permute(const VertexPermutation& s) const;

    friend bool operator==(const XSeed& a, const XSeed& b);

private:
    ExchangeMatrix b_;
    VarSetPtr vars_;
    std::vector<Poly> x_;
};

// y-variables in the universal semifield, kept as factored rational functions
// whose factors are subtraction-free.
class YSeedUniversal {
public:
    static YSeedUniversal initial(const ExchangeMatrix& b);

    const ExchangeMatrix& matrix() const { return b_; }
    const VarSetPtr& vars() const { return vars_; }
    const std::vector<Fraction>& values() const { return y_; }
    const Fraction& y(const Vertex& v) const { return y_.at(static_cast<std::size_t>(b_.index(v))); }

    YSeedUniversal mutate(const Vertex& k) const;
    YSeedUniversal permute(const VertexPermutation& s) const;

    // Principal parts of all y-variables.
    std::vector<TropicalPoint> principal_parts() const;
    // True when every numerator and denominator has nonnegative coefficients.
    bool subtraction_free() const;

    friend bool operator==(const YSeedUniversal& a, const YSeedUniversal& b);

private:
    ExchangeMatrix b_;
    VarSetPtr vars_;
    std::vector<Fraction> y_;
};

class YSeedTropical {
public:
    static YSeedTropical initial(const ExchangeMatrix& b);

    const ExchangeMatrix& matrix() const { return b_; }
    const std::vector<TropicalPoint>& values() const { return y_; }
    const TropicalPoint& y(const Vertex& v) const { return y_.at(static_cast<std::size_t>(b_.index(v))); }

    YSeedTropical mutate(const Vertex& k) const;
    YSeedTropical permute(const VertexPermutation& s) const;

    friend bool operator==(const YSeedTropical& a, const YSeedTropical& b) = default;

private:
    ExchangeMatrix b_;
    std::vector<TropicalPoint> y_;
};

// Seed with principal tropical coefficients: x-variables live over the
// initial x-names together with the initial y-names.
class XYSeed {
public:
    static XYSeed initial(const ExchangeMatrix& b);

    const ExchangeMatrix& matrix() const { return b_; }
    const VarSetPtr& vars() const { return vars_; }
    const Poly& x(const Vertex& v) const { return x_.at(static_cast<std::size_t>(b_.index(v))); }
    const TropicalPoint& y(const Vertex& v) const { return y_.at(static_cast<std::size_t>(b_.index(v))); }

    XYSeed mutate(const Vertex& k) const;
    XYSeed permute(const VertexPermutation& s) const;

    friend bool operator==(const XYSeed& a, const XYSeed& b);

private:
    ExchangeMatrix b_;
    VarSetPtr vars_;
    std::vector<Poly> x_;
    std::vector<TropicalPoint> y_;
};

template <class Seed>
Seed apply_word(Seed s, const MutationWord& w)
{
    for (auto& st : w.steps()) {
        if (st.kind == Step::Kind::Mutate) s = s.mutate(st.a);
        else s = s.permute(VertexPermutation::transposition(st.a, st.b));
    }
    return s;
}

enum class SeedKind { Tropical, Universal, XY };

// Whether applying w to the initial seed of the given kind on b gives sigma(initial seed).
bool check_period(const ExchangeMatrix& b, const MutationWord& w, const VertexPermutation& sigma, SeedKind kind);

// pi(universal) == tropical after every step of w, starting from the initial seeds on b.
bool check_pi_compatibility(const ExchangeMatrix& b, const MutationWord& w);

// Closed forms.  Each returns one image per variable of vars (identity on
// variables it does not touch).  Vertex (c,i) is x_i on M = M_c; M^- = M_{c-1},
// M^+ = M_{c+1}.

// Simple cluster R-matrix on x-variables, 1 <= c <= m-1.
std::vector<Poly> closed_R_x(const VarSetPtr& vars, int n, int c);
// Enriched version; frozen variables absent from vars are set to 1.
std::vector<Poly> closed_tilde_R(const VarSetPtr& vars, int n, int c);
// S with R_M(x_i) = S x_i.
Fraction S_factor(const VarSetPtr& vars, int n, int c);
// Cluster variable at vertex (c,i) after mutating (c,1),...,(c,i), 1 <= i <= n-2.
Poly intermediate_half(const VarSetPtr& vars, int n, int c, int i);
// R_{M_c} on universal y-variables of Q_{n,m}, 0 <= c <= m.
std::vector<Fraction> closed_R_y_classical(const VarSetPtr& vars, int n, int m, int c);
// alpha_i(M_c) as a polynomial in the y-variables.
Poly alpha_classical(const VarSetPtr& vars, int n, int c, int i);
// Tropical images of the initial y-generators of Q_{n,m} under R_{M_c}.
std::vector<TropicalPoint> closed_R_y_tropical(const ExchangeMatrix& q, int n, int m, int c);

// Apply a substitution given by images of the generators.
std::vector<Fraction> compose(const std::vector<Fraction>& outer, const std::vector<Fraction>& inner);
std::vector<Fraction> as_fractions(const std::vector<Poly>& images);
std::vector<Fraction> identity_map(const VarSetPtr& vars);

}  // namespace clr
