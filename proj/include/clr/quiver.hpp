#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace clr {

// Vertex label.  A grid vertex (j,i) lies on cycle M_j at position i (1..n).
// A frozen arrow-vertex v_{a,a'} stores both endpoints of the arrow a -> a'.
struct Vertex {
    int j = 0;
    int i = 0;
    int tj = -1;
    int ti = -1;

    static Vertex grid(int j, int i) { return {j, i, -1, -1}; }
    static Vertex arrow(Vertex a, Vertex b) { return {a.j, a.i, b.j, b.i}; }

    bool is_arrow() const { return tj >= 0; }
    Vertex tail() const { return grid(j, i); }
    Vertex head() const { return grid(tj, ti); }

    auto operator<=>(const Vertex&) const = default;

    // "j:i" or "j:i>j':i'".
    std::string str() const;
    static Vertex parse(const std::string& s);
};

class ExchangeMatrix;

// Bijection on vertex labels; labels outside the map are fixed.
class VertexPermutation {
public:
    VertexPermutation() = default;
    static VertexPermutation transposition(Vertex a, Vertex b);

    void set(Vertex from, Vertex to) { map_[from] = to; }
    Vertex operator()(const Vertex& v) const;
    VertexPermutation then(const VertexPermutation& next) const;
    bool is_bijection() const;
    bool is_identity() const;
    const std::map<Vertex, Vertex>& map() const { return map_; }

private:
    std::map<Vertex, Vertex> map_;
};

struct FrozenVertexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exchange matrix with structured labels.  Entries between two frozen
// vertices are always zero.
class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    ExchangeMatrix(std::vector<Vertex> labels, std::vector<bool> frozen);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<Vertex>& labels() const { return labels_; }
    const Vertex& label(int k) const { return labels_.at(static_cast<std::size_t>(k)); }
    int index(const Vertex& v) const;
    bool contains(const Vertex& v) const { return index_.count(v) != 0; }
    bool is_frozen(int k) const { return frozen_.at(static_cast<std::size_t>(k)); }
    std::vector<int> mutable_indices() const;

    int b(int u, int v) const { return b_[static_cast<std::size_t>(u * size() + v)]; }
    int b(const Vertex& u, const Vertex& v) const { return b(index(u), index(v)); }
    void add_arrows(int u, int v, int count = 1);
    void add_arrows(const Vertex& u, const Vertex& v, int count = 1) { add_arrows(index(u), index(v), count); }

    ExchangeMatrix mutate(int k) const;
    ExchangeMatrix mutate(const Vertex& k) const { return mutate(index(k)); }
    // sigma(B): entry at (sigma(u), sigma(v)) equals b_{uv}.
    ExchangeMatrix permuted(const VertexPermutation& sigma) const;
    // Full subquiver on the given labels (in the given order).
    ExchangeMatrix restricted(const std::vector<Vertex>& keep) const;

    struct Arrow {
        Vertex from;
        Vertex to;
        int count;
        auto operator<=>(const Arrow&) const = default;
    };
    std::vector<Arrow> arrows() const;
    // One line "u -> v" per arrow (repeated for multiplicities).
    std::string export_text() const;

    // Label-aware equality: same labels, frozen sets and entries.
    friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b);

private:
    std::vector<Vertex> labels_;
    std::vector<bool> frozen_;
    std::map<Vertex, int> index_;
    std::vector<int> b_;
};

// Matrix mutation on a bare skew-symmetrizable integer matrix (row-major n x n).
std::vector<int> mutate_matrix(const std::vector<int>& b, int n, int k);

int wrap(int i, int n);  // representative of i mod n in 1..n

ExchangeMatrix build_Q(int n, int m);
ExchangeMatrix build_Q_tilde(int n, int m);
ExchangeMatrix build_Q_tilde_prime(int n, int m);

// Arrows of A_i(Q) on M^- u M u M^+ (cycles 0,1,2) as enumerated by the
// structural lemmas; i = 0 is the initial quiver.
std::vector<ExchangeMatrix::Arrow> structural_oracle_Ai(int n, int i);
// Arrow list of a restricted quiver in the same format.
std::vector<ExchangeMatrix::Arrow> sorted_arrows(const ExchangeMatrix& q);

}  // namespace clr
