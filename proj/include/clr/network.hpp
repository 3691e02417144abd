#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clr/oracle.hpp"
#include "clr/qtorus.hpp"
#include "clr/rmatrices.hpp"
#include "clr/skew.hpp"

namespace clr {

// N_{n,m} and its universal cover.  Horizontal wires are indexed by i in Z
// (i grows downwards, weights repeat with period n); the vertical wire W_j
// runs upwards from its crossing with wire i to its crossing with wire i-1.
// The crossing (j, i) carries q_j^{(i mod n)}.
struct CylNetwork {
    int n = 0;
    int m = 0;
    CommPtr comm;  // lambda_snake(n, m)
    std::vector<int> gen;  // gen[(j-1)*n + (i-1)]

    static CylNetwork make(int n, int m);
    int weight_index(int j, int i) const;
};

// Snake index of the crossing (j, i).
inline int snake_of(int j, int i) { return i + j - 1; }

enum class Turn {
    Straight,  // along the horizontal wire; picks up the vertex weight
    Up,        // from the horizontal wire onto W_j
    Right,     // from W_j back onto a horizontal wire
};

struct PathStep {
    int col;
    int wire;
    Turn turn;
};

// H: wire `wire` between columns col and col+1 (col = 0 is the source edge,
// col = m the sink edge).  V: W_col between wires `wire` and wire-1.
struct HighwayEdge {
    bool vertical = false;
    int col = 0;
    int wire = 0;

    auto operator<=>(const HighwayEdge&) const = default;
};

struct Interval {
    int a = 0;
    int b = -1;

    int size() const { return b - a + 1; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

// A highway path on the cover entering column first_col along start_wire and
// leaving column last_col.  At each column it either goes straight or climbs
// one wire; climbing twice on the same W_j has weight zero.
class HighwayPath {
public:
    HighwayPath(int first_col, int start_wire, std::vector<bool> straight);

    int first_col() const { return first_; }
    int last_col() const { return first_ + static_cast<int>(straight_.size()) - 1; }
    int start_wire() const { return start_; }
    int end_wire() const;
    const std::vector<bool>& straight() const { return straight_; }
    // Wire along which the path enters column j.
    int wire_at(int j) const;

    std::vector<PathStep> steps() const;
    // Edges in order, starting with the entering edge H(first_col-1, start_wire).
    std::vector<HighwayEdge> edges() const;
    // Picked crossings (j, i) in order.
    std::vector<std::pair<int, int>> picks() const;
    // s(P); b = a-1 when nothing is picked.
    Interval s_interval() const;

    NCMonomial monomial(const CylNetwork& net) const;
    NCLaurent weight(const CylNetwork& net) const;
    HighwayPath shifted(int t) const;

    friend bool operator==(const HighwayPath&, const HighwayPath&) = default;

private:
    int first_;
    int start_;
    std::vector<bool> straight_;
};

// All highway paths entering first_col on source_wire and leaving column m on
// sink_wire.  The lift's vertical displacement fixes the homology class.
std::vector<HighwayPath> enumerate_highway_paths(const CylNetwork& net, int source_wire, int sink_wire,
                                                 int first_col = 1);

// Reduction of an edge to N_{n,m}.
HighwayEdge base_edge(const HighwayEdge& e, int n);
// Edge-disjoint on the cover, or on N_{n,m} when on_base.
bool paths_disjoint(const HighwayPath& p, const HighwayPath& q, int n, bool on_base);

struct PathSpec {
    int source = 0;  // wire entering column 1
    int sink = 0;    // wire leaving column m
};

PathSpec path_for_interval(int m, const Interval& s);

enum class PathOrder { BottomToTop, AsGiven };

// Sum over non-intersecting families of the ordered products wt(P_1)...wt(P_r).
// BottomToTop reorders the specs by decreasing source wire first.
NCLaurent measurement(const CylNetwork& net, std::vector<PathSpec> specs, bool on_base,
                      PathOrder order = PathOrder::BottomToTop);
// Same with the paths given by their s-intervals, in the given order.
NCLaurent interval_measurement(const CylNetwork& net, const std::vector<Interval>& spec, bool on_base);

// Quantum loop elementary symmetric functions.
NCLaurent loop_e(const CylNetwork& net, int k, int r);
// e(a, b) = e^{(a)}_{b-a+1}.
NCLaurent e_interval(const CylNetwork& net, int a, int b);

// Polynomials in the central spectral parameter t; entry s is the t^s coefficient.
using TPoly = std::vector<NCLaurent>;
using TMatrix = std::vector<std::vector<TPoly>>;

TMatrix transfer_matrix(const CylNetwork& net, int j);
// M(q_1;t)...M(q_m;t), truncated above t^cap.
TMatrix transfer_product(const CylNetwork& net, int cap);

// Column description shared by skew and cylindric shapes: column c holds the
// rows top..bot (empty when bot < top).
struct ColumnRange {
    int col = 0;
    int top = 1;
    int bot = 0;

    int size() const { return bot >= top ? bot - top + 1 : 0; }
};

struct Box {
    int row;
    int col;

    friend bool operator==(const Box&, const Box&) = default;
};

class SkewShape {
public:
    static SkewShape from_partitions(std::vector<int> lambda, std::vector<int> mu = {});
    // "3,2,1/1" or "2,1".
    static SkewShape parse(const std::string& text);

    const std::vector<int>& lambda() const { return lambda_; }
    const std::vector<int>& mu() const { return mu_; }
    std::vector<ColumnRange> columns() const;
    // Column by column, each top to bottom.
    std::vector<Box> boxes() const;
    int size() const;
    std::string str() const;

private:
    std::vector<int> lambda_, mu_;
};

// Finite convex subposet of C_s = Z^2/(n-s, s)Z, stored by the n-s columns of
// one fundamental domain starting at `first_col`.  Column c + (n-s) holds the
// rows of column c moved up by s.  `offset` selects the domain used for
// reading words: columns first_col+offset .. first_col+offset+n-s-1.
class CylindricShape {
public:
    CylindricShape(int n, int s, std::vector<ColumnRange> domain, int offset = 0);
    // Periodic extension of a straight or skew shape spanning n-s columns.
    static CylindricShape from_skew(int n, int s, const SkewShape& shape, int offset = 0);
    // "n;s;top:bot,top:bot,..." with columns numbered from 1.
    static CylindricShape parse(const std::string& text);

    int n() const { return n_; }
    int s() const { return s_; }
    int width() const { return n_ - s_; }
    int offset() const { return offset_; }
    CylindricShape with_offset(int offset) const;
    // Any column of the periodic shape.
    ColumnRange column(int c) const;
    // Columns of the reading domain.
    std::vector<ColumnRange> reading_columns() const;
    // Boxes of the reading domain, column by column, top to bottom.
    std::vector<Box> boxes() const;
    int size() const;
    std::string str() const;

private:
    int n_, s_;
    std::vector<ColumnRange> dom_;
    int offset_;
};

// Entries aligned with shape.boxes().
struct Tableau {
    std::vector<Box> boxes;
    std::vector<int> entries;

    int at(const Box& b) const;
};

std::vector<Tableau> semistandard_tableaux(const SkewShape& shape, int m);
std::vector<Tableau> cylindric_tableaux(const CylindricShape& shape, int m);

// prod_b q_{T(b)}^{(c(b) - T(b) + r + 1)}, c(b) = row - col, in the order of T.boxes.
NCMonomial reading_word(const CylNetwork& net, const Tableau& t, int r);

NCLaurent loop_schur(const CylNetwork& net, const SkewShape& shape, int r);
NCLaurent cylindric_loop_schur(const CylNetwork& net, const CylindricShape& shape, int r);

// s-intervals of the column paths of a shape, leftmost column first.
std::vector<Interval> column_intervals(const std::vector<ColumnRange>& cols, int r);
// Family of non-intersecting paths on the cover realizing the skew shape.
NCLaurent cover_measurement(const CylNetwork& net, const SkewShape& shape, int r);
// Family of non-intersecting paths on N_{n,m} realizing the cylindric shape.
NCLaurent base_measurement(const CylNetwork& net, const CylindricShape& shape, int r);

// Exponent relations between path weights.
int chi(int n, int z);
// alpha(P1, P2) for a path split with s(P1) = [a,b], s(P2) = [b+1,c].
int alpha_PP(int n, int a, int b, int c);
// alpha(P, Q) for s(P) = [a,b], s(Q) = [c,d], c < a.
int alpha_PQ(int n, int a, int b, int c, int d);
// Hypotheses of the alpha_PQ formula on explicit paths of a network.
bool pq_hypotheses(const CylNetwork& net, const HighwayPath& p, const HighwayPath& q);
// Moves the pick on snake k one column to the left when the path climbs just
// before it; otherwise returns P unchanged.
HighwayPath apply_m_k(const HighwayPath& p, int k);

// sum over i<j with b_i<b_j of -1 - chi(a_j-b_j-1) + chi(a_j-b_i-1).
int beta(int n, const std::vector<Interval>& spec);

struct ETerm {
    int sign = 1;
    int eps = 0;
    std::vector<Interval> factors;  // e(a_1,b'_1) e(a_2,b'_2) ...
};

// Signed eps-weighted expansion of the base measurement with the given
// intervals in products of e(a, b').  Requires a_1 > ... > a_r > a_1 - n and
// the same for the b_i.
std::vector<ETerm> expand_measurement_in_e(int n, int m, const std::vector<Interval>& spec);
NCLaurent evaluate_e_terms(const CylNetwork& net, const std::vector<ETerm>& terms);
std::string e_terms_str(const std::vector<ETerm>& terms);
// True when all sinks lie strictly within one period of each other. The pair
// correction in the expansion is only derived in this regime.
bool sinks_within_period(int n, const std::vector<Interval>& spec);
// Interval lists (a_1,b_1),... with n >= a_1 > a_2 > ... > a_1 - n, sinks
// decreasing within one period, 0 <= b_i - a_i + 1 <= m and at most
// max_cells picks in total.
std::vector<std::vector<Interval>> cylindric_specs(int n, int m, int max_paths, int max_cells);

// Yang-Baxter move on parameters with pqr = rqp.
struct YBTriple {
    SkewExpr p, q, r;
};

YBTriple yb_move(const YBTriple& t);
// pqr vs rqp.
std::pair<SkewExpr, SkewExpr> yb_precondition(const YBTriple& t);
// Exact check when p, q, r are eps-monomials in the generators; nullopt otherwise.
std::optional<bool> yb_precondition_exact(const YBTriple& t);
// Throws std::invalid_argument if the precondition is refuted.
YBTriple yb_move_checked(const YBTriple& t, const OracleConfig& cfg);
// qr = p'q', p+r = q', q = p'+r', qp = r'q', pq = q'r'.
std::vector<std::pair<SkewExpr, SkewExpr>> yb_relations(const YBTriple& before, const YBTriple& after);

// Products p_n...p_1 and q_n...q_1 (central).
NCLaurent pq_loop_product(const CommPtr& c, int n, const std::vector<int>& gens);
// r_i = (p_n...p_1 - q_n...q_1) (kappa_i)^{-1}; p[k-1], q[k-1] index p_k, q_k.
SkewExpr r_parameter(const CommPtr& c, int n, int i, const std::vector<int>& p, const std::vector<int>& q);

struct LensPush {
    SkewMap map;                 // images of all generators
    std::vector<SkewExpr> lens;  // lens[k] = value after pushing through k wires, lens[0] = r_{n+1}
};

// Lens creation, Yang-Baxter pushes through wires n, n-1, ..., 1 and annihilation.
LensPush push_lens_around(const CommPtr& c, int n, const std::vector<int>& p, const std::vector<int>& q);
// The same on columns j, j+1 of lambda_snake(n, m).
LensPush push_lens_snake(const CommPtr& c, int n, int j);

// Finite directed network with 4-valent highway vertices: entering along
// in_h and leaving along out_h picks up the weight, in_h -> out_v and
// in_v -> out_h have weight 1, in_v -> out_v has weight 0.
class HighwayGraph {
public:
    explicit HighwayGraph(CommPtr c) : comm_(std::move(c)) {}

    int add_edge();
    void add_vertex(int in_h, int in_v, int out_h, int out_v, const NCLaurent& weight);
    int edge_count() const { return static_cast<int>(head_.size()); }
    const CommPtr& comm() const { return comm_; }

    // All weighted paths from edge s to edge t.
    std::vector<std::pair<std::vector<int>, NCLaurent>> paths(int s, int t) const;
    // Sum over edge-disjoint families, P_1 first.
    NCLaurent measurement(const std::vector<std::pair<int, int>>& ends) const;

private:
    struct V {
        int in_h, in_v, out_h, out_v;
        NCLaurent w;
    };
    CommPtr comm_;
    std::vector<int> head_;  // vertex entered by the edge, or -1
    std::vector<V> verts_;
};

// Window of the cover of N_{n,m} on wires lo..hi.  The weights are looked up
// by the names qj_i in c.  source_edges[i-lo] and sink_edges[i-lo] are the
// boundary edges of wire i.
struct CoverWindow {
    HighwayGraph graph;
    int lo = 0, hi = 0;
    std::vector<int> source_edges, sink_edges;
};

CoverWindow cover_window(const CommPtr& c, int n, int m, int lo, int hi);
// The same window with a lens between W_col and W_{col+1} on the segment
// between wires `wire` and wire-1; the lens vertices carry x and -x.
CoverWindow cover_window_with_lens(const CommPtr& c, int n, int m, int lo, int hi, int col, int wire,
                                   const NCLaurent& x);

}  // namespace clr
