#include "clr/network.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace clr {

namespace {

std::size_t uz(int a) { return static_cast<std::size_t>(a); }

int mod(int a, int n) { return ((a % n) + n) % n; }

NCMonomial unit(const CommutationMatrix& c) { return {0, Exponent(uz(c.size()), 0)}; }

NCMonomial gen_mono(const CommutationMatrix& c, int a)
{
    NCMonomial g = unit(c);
    g.e[uz(a)] = 1;
    return g;
}

NCLaurent one(const CommPtr& c) { return NCLaurent::constant(c, EpsScalar(1)); }

// All increasing k-subsets of first..last.
void for_each_subset(int first, int last, int k, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == k) {
            f(cur);
            return;
        }
        for (int j = from; j <= last - (k - static_cast<int>(cur.size())) + 1; ++j) {
            cur.push_back(j);
            rec(j + 1);
            cur.pop_back();
        }
    };
    if (k >= 0 && k <= last - first + 1) rec(first);
}

}  // namespace

CylNetwork CylNetwork::make(int n, int m)
{
    if (m < 1) throw std::invalid_argument("network needs m >= 1");
    CylNetwork net;
    net.n = n;
    net.m = m;
    net.comm = lambda_snake(n, m);
    for (int j = 1; j <= m; ++j) {
        for (int i = 1; i <= n; ++i) net.gen.push_back(net.comm->index(snake_name(j, i)));
    }
    return net;
}

int CylNetwork::weight_index(int j, int i) const
{
    if (j < 1 || j > m) throw std::out_of_range("column outside the network");
    return gen[uz((j - 1) * n + wrap(i, n) - 1)];
}

HighwayPath::HighwayPath(int first_col, int start_wire, std::vector<bool> straight)
    : first_(first_col), start_(start_wire), straight_(std::move(straight))
{
}

int HighwayPath::end_wire() const
{
    int w = start_;
    for (bool s : straight_) w -= s ? 0 : 1;
    return w;
}

int HighwayPath::wire_at(int j) const
{
    if (j < first_ || j > last_col() + 1) throw std::out_of_range("column outside the path");
    int w = start_;
    for (int c = first_; c < j; ++c) w -= straight_[uz(c - first_)] ? 0 : 1;
    return w;
}

std::vector<PathStep> HighwayPath::steps() const
{
    std::vector<PathStep> r;
    int w = start_;
    for (int c = first_; c <= last_col(); ++c) {
        if (straight_[uz(c - first_)]) {
            r.push_back({c, w, Turn::Straight});
        } else {
            r.push_back({c, w, Turn::Up});
            r.push_back({c, w - 1, Turn::Right});
            --w;
        }
    }
    return r;
}

std::vector<HighwayEdge> HighwayPath::edges() const
{
    std::vector<HighwayEdge> r{{false, first_ - 1, start_}};
    int w = start_;
    for (int c = first_; c <= last_col(); ++c) {
        if (!straight_[uz(c - first_)]) {
            r.push_back({true, c, w});
            --w;
        }
        r.push_back({false, c, w});
    }
    return r;
}

std::vector<std::pair<int, int>> HighwayPath::picks() const
{
    std::vector<std::pair<int, int>> r;
    int w = start_;
    for (int c = first_; c <= last_col(); ++c) {
        if (straight_[uz(c - first_)]) r.push_back({c, w});
        else --w;
    }
    return r;
}

Interval HighwayPath::s_interval() const
{
    int a = snake_of(first_, start_);
    int k = static_cast<int>(std::count(straight_.begin(), straight_.end(), true));
    return {a, a + k - 1};
}

NCMonomial HighwayPath::monomial(const CylNetwork& net) const
{
    NCMonomial r = unit(*net.comm);
    for (auto [j, i] : picks()) r = mono_mul(*net.comm, r, gen_mono(*net.comm, net.weight_index(j, i)));
    return r;
}

NCLaurent HighwayPath::weight(const CylNetwork& net) const { return NCLaurent::monomial(net.comm, monomial(net)); }

HighwayPath HighwayPath::shifted(int t) const { return HighwayPath(first_, start_ + t, straight_); }

std::vector<HighwayPath> enumerate_highway_paths(const CylNetwork& net, int source_wire, int sink_wire, int first_col)
{
    std::vector<HighwayPath> r;
    const int width = net.m - first_col + 1;
    const int climbs = source_wire - sink_wire;
    if (width < 0 || climbs < 0 || climbs > width) return r;
    for_each_subset(first_col, net.m, climbs, [&](const std::vector<int>& up) {
        std::vector<bool> s(uz(width), true);
        for (int c : up) s[uz(c - first_col)] = false;
        r.emplace_back(first_col, source_wire, std::move(s));
    });
    return r;
}

HighwayEdge base_edge(const HighwayEdge& e, int n) { return {e.vertical, e.col, wrap(e.wire, n)}; }

bool paths_disjoint(const HighwayPath& p, const HighwayPath& q, int n, bool on_base)
{
    std::set<HighwayEdge> seen;
    for (auto e : p.edges()) seen.insert(on_base ? base_edge(e, n) : e);
    for (auto e : q.edges()) {
        if (seen.count(on_base ? base_edge(e, n) : e)) return false;
    }
    return true;
}

PathSpec path_for_interval(int m, const Interval& s) { return {s.a, s.b + 1 - m}; }

NCLaurent measurement(const CylNetwork& net, std::vector<PathSpec> specs, bool on_base, PathOrder order)
{
    if (order == PathOrder::BottomToTop) {
        std::stable_sort(specs.begin(), specs.end(),
                         [](const PathSpec& x, const PathSpec& y) { return x.source > y.source; });
    }
    const auto& c = *net.comm;
    struct Cand {
        NCMonomial w;
        std::vector<HighwayEdge> edges;
    };
    std::vector<std::vector<Cand>> cands;
    for (auto& sp : specs) {
        std::vector<Cand> list;
        for (auto& p : enumerate_highway_paths(net, sp.source, sp.sink)) {
            Cand cd{p.monomial(net), p.edges()};
            if (on_base) {
                for (auto& e : cd.edges) e = base_edge(e, net.n);
            }
            list.push_back(std::move(cd));
        }
        cands.push_back(std::move(list));
    }
    NCLaurent r(net.comm);
    std::multiset<HighwayEdge> used;
    std::function<void(std::size_t, const NCMonomial&)> rec = [&](std::size_t k, const NCMonomial& acc) {
        if (k == cands.size()) {
            r.add_term(acc.e, EpsScalar::eps_pow(acc.eps));
            return;
        }
        for (auto& cd : cands[k]) {
            bool ok = true;
            for (auto& e : cd.edges) {
                if (used.count(e)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (auto& e : cd.edges) used.insert(e);
            rec(k + 1, mono_mul(c, acc, cd.w));
            for (auto& e : cd.edges) used.erase(used.find(e));
        }
    };
    rec(0, unit(c));
    return r;
}

NCLaurent interval_measurement(const CylNetwork& net, const std::vector<Interval>& spec, bool on_base)
{
    std::vector<PathSpec> specs;
    for (auto& s : spec) specs.push_back(path_for_interval(net.m, s));
    return measurement(net, specs, on_base, PathOrder::AsGiven);
}

NCLaurent loop_e(const CylNetwork& net, int k, int r)
{
    if (k == 0) return one(net.comm);
    NCLaurent out(net.comm);
    if (k < 0 || k > net.m) return out;
    const auto& c = *net.comm;
    for_each_subset(1, net.m, k, [&](const std::vector<int>& js) {
        NCMonomial w = unit(c);
        for (int t = 1; t <= k; ++t) {
            int j = js[uz(t - 1)];
            w = mono_mul(c, w, gen_mono(c, net.weight_index(j, r + t - j)));
        }
        out.add_term(w.e, EpsScalar::eps_pow(w.eps));
    });
    return out;
}

NCLaurent e_interval(const CylNetwork& net, int a, int b) { return loop_e(net, b - a + 1, a); }

namespace {

TPoly tpoly_mul(const TPoly& x, const TPoly& y, int cap)
{
    TPoly r;
    for (std::size_t s = 0; s < x.size(); ++s) {
        if (x[s].is_zero()) continue;
        for (std::size_t u = 0; u < y.size(); ++u) {
            if (y[u].is_zero() || static_cast<int>(s + u) > cap) continue;
            if (r.size() <= s + u) r.resize(s + u + 1, NCLaurent(x[s].comm()));
            r[s + u] += x[s] * y[u];
        }
    }
    return r;
}

void tpoly_add(TPoly& x, const TPoly& y)
{
    if (x.size() < y.size()) x.resize(y.size(), NCLaurent(y.front().comm()));
    for (std::size_t s = 0; s < y.size(); ++s) x[s] += y[s];
}

}  // namespace

TMatrix transfer_matrix(const CylNetwork& net, int j)
{
    const int n = net.n;
    TMatrix M(uz(n), std::vector<TPoly>(uz(n)));
    for (int i = 1; i <= n; ++i) {
        M[uz(i - 1)][uz(i - 1)] = {NCLaurent::generator(net.comm, net.weight_index(j, i))};
        if (i < n) M[uz(i)][uz(i - 1)] = {one(net.comm)};
    }
    M[0][uz(n - 1)] = {NCLaurent(net.comm), one(net.comm)};
    return M;
}

TMatrix transfer_product(const CylNetwork& net, int cap)
{
    const int n = net.n;
    TMatrix acc = transfer_matrix(net, 1);
    for (int j = 2; j <= net.m; ++j) {
        TMatrix B = transfer_matrix(net, j);
        TMatrix C(uz(n), std::vector<TPoly>(uz(n)));
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    if (acc[uz(i)][uz(l)].empty() || B[uz(l)][uz(k)].empty()) continue;
                    TPoly t = tpoly_mul(acc[uz(i)][uz(l)], B[uz(l)][uz(k)], cap);
                    if (!t.empty()) tpoly_add(C[uz(i)][uz(k)], t);
                }
            }
        }
        acc = std::move(C);
    }
    for (auto& row : acc) {
        for (auto& e : row) {
            if (static_cast<int>(e.size()) > cap + 1) e.resize(uz(cap + 1));
        }
    }
    return acc;
}

SkewShape SkewShape::from_partitions(std::vector<int> lambda, std::vector<int> mu)
{
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    for (std::size_t i = 1; i < lambda.size(); ++i) {
        if (lambda[i] > lambda[i - 1]) throw std::invalid_argument("lambda is not a partition");
    }
    for (std::size_t i = 1; i < mu.size(); ++i) {
        if (mu[i] > mu[i - 1]) throw std::invalid_argument("mu is not a partition");
    }
    if (mu.size() > lambda.size()) throw std::invalid_argument("mu is not contained in lambda");
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] > lambda[i] || mu[i] < 0) throw std::invalid_argument("mu is not contained in lambda");
    }
    SkewShape s;
    s.lambda_ = std::move(lambda);
    s.mu_ = std::move(mu);
    return s;
}

namespace {

std::vector<int> parse_ints(const std::string& text, char sep)
{
    std::vector<int> r;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
        r.push_back(v);
    }
    return r;
}

}  // namespace

SkewShape SkewShape::parse(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return from_partitions(parse_ints(text, ','));
        return from_partitions(parse_ints(text.substr(0, slash), ','), parse_ints(text.substr(slash + 1), ','));
    } catch (const std::logic_error& e) {
        throw std::invalid_argument("bad skew shape '" + text + "': " + e.what());
    }
}

std::vector<ColumnRange> SkewShape::columns() const
{
    std::vector<ColumnRange> r;
    const int w = lambda_.empty() ? 0 : lambda_.front();
    for (int c = 1; c <= w; ++c) {
        int lo = 0, hi = 0;
        for (int x : lambda_) hi += x >= c ? 1 : 0;
        for (int x : mu_) lo += x >= c ? 1 : 0;
        r.push_back({c, lo + 1, hi});
    }
    return r;
}

std::vector<Box> SkewShape::boxes() const
{
    std::vector<Box> r;
    for (auto& col : columns()) {
        for (int i = col.top; i <= col.bot; ++i) r.push_back({i, col.col});
    }
    return r;
}

int SkewShape::size() const
{
    return std::accumulate(lambda_.begin(), lambda_.end(), 0) - std::accumulate(mu_.begin(), mu_.end(), 0);
}

std::string SkewShape::str() const
{
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    return mu_.empty() ? join(lambda_) : join(lambda_) + "/" + join(mu_);
}

CylindricShape::CylindricShape(int n, int s, std::vector<ColumnRange> domain, int offset)
    : n_(n), s_(s), dom_(std::move(domain)), offset_(offset)
{
    if (n_ <= 2) throw std::invalid_argument("cylindric shapes need n > 2");
    if (s_ < 1 || s_ >= n_) throw std::invalid_argument("cylindric shapes need 0 < s < n");
    if (static_cast<int>(dom_.size()) != n_ - s_) throw std::invalid_argument("a fundamental domain has n-s columns");
    for (std::size_t k = 1; k < dom_.size(); ++k) {
        if (dom_[k].col != dom_[k - 1].col + 1) throw std::invalid_argument("domain columns must be consecutive");
    }
    for (auto& c : dom_) {
        if (c.bot < c.top - 1) throw std::invalid_argument("column range with bot < top - 1");
    }
    // Boundaries weakly decrease from each column to the next, also across the
    // period.
    for (int k = 0; k < width(); ++k) {
        ColumnRange a = column(dom_.front().col + k), b = column(dom_.front().col + k + 1);
        if (b.top > a.top || b.bot > a.bot) throw std::invalid_argument("not a cylindric skew shape");
    }
    if (size() == 0) throw std::invalid_argument("empty cylindric shape");
}

CylindricShape CylindricShape::from_skew(int n, int s, const SkewShape& shape, int offset)
{
    auto cols = shape.columns();
    if (static_cast<int>(cols.size()) > n - s) throw std::invalid_argument("shape wider than the fundamental domain");
    while (static_cast<int>(cols.size()) < n - s) {
        int c = cols.empty() ? 1 : cols.back().col + 1;
        int top = cols.empty() ? 1 : cols.back().top;
        cols.push_back({c, top, top - 1});
    }
    return CylindricShape(n, s, std::move(cols), offset);
}

CylindricShape CylindricShape::parse(const std::string& text)
{
    auto parts = std::vector<std::string>{};
    {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ';')) parts.push_back(item);
    }
    if (parts.size() != 3) throw std::invalid_argument("cylindric shape must read 'n;s;top:bot,...'");
    try {
        int n = std::stoi(parts[0]), s = std::stoi(parts[1]);
        std::vector<ColumnRange> cols;
        std::stringstream ss(parts[2]);
        std::string item;
        int c = 1;
        while (std::getline(ss, item, ',')) {
            auto v = parse_ints(item, ':');
            if (v.size() != 2) throw std::invalid_argument("column must read top:bot");
            cols.push_back({c++, v[0], v[1]});
        }
        return CylindricShape(n, s, std::move(cols));
    } catch (const std::logic_error& e) {
        throw std::invalid_argument("bad cylindric shape '" + text + "': " + e.what());
    }
}

CylindricShape CylindricShape::with_offset(int offset) const { return CylindricShape(n_, s_, dom_, offset); }

ColumnRange CylindricShape::column(int c) const
{
    const int w = width();
    const int rel = c - dom_.front().col;
    const int q = rel >= 0 ? rel / w : -((-rel + w - 1) / w);
    const ColumnRange& base = dom_[uz(rel - q * w)];
    return {c, base.top - q * s_, base.bot - q * s_};
}

std::vector<ColumnRange> CylindricShape::reading_columns() const
{
    std::vector<ColumnRange> r;
    for (int k = 0; k < width(); ++k) r.push_back(column(dom_.front().col + offset_ + k));
    return r;
}

std::vector<Box> CylindricShape::boxes() const
{
    std::vector<Box> r;
    for (auto& col : reading_columns()) {
        for (int i = col.top; i <= col.bot; ++i) r.push_back({i, col.col});
    }
    return r;
}

int CylindricShape::size() const
{
    int t = 0;
    for (auto& c : dom_) t += c.size();
    return t;
}

std::string CylindricShape::str() const
{
    std::string s = std::to_string(n_) + ";" + std::to_string(s_) + ";";
    for (std::size_t k = 0; k < dom_.size(); ++k) {
        s += (k ? "," : "") + std::to_string(dom_[k].top) + ":" + std::to_string(dom_[k].bot);
    }
    return s;
}

int Tableau::at(const Box& b) const
{
    for (std::size_t k = 0; k < boxes.size(); ++k) {
        if (boxes[k] == b) return entries[k];
    }
    throw std::out_of_range("box not in tableau");
}

namespace {

struct Constraint {
    int lo, hi;  // T(lo) <= T(hi), or < when strict
    bool strict;
};

std::vector<Tableau> fill(const std::vector<Box>& boxes, const std::vector<Constraint>& cons, int m)
{
    const int N = static_cast<int>(boxes.size());
    std::vector<std::vector<Constraint>> at(uz(N));
    for (auto& c : cons) at[uz(std::max(c.lo, c.hi))].push_back(c);
    std::vector<Tableau> out;
    std::vector<int> val(uz(N), 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == N) {
            out.push_back({boxes, val});
            return;
        }
        for (int v = 1; v <= m; ++v) {
            val[uz(k)] = v;
            bool ok = true;
            for (auto& c : at[uz(k)]) {
                int x = val[uz(c.lo)], y = val[uz(c.hi)];
                if (c.strict ? !(x < y) : !(x <= y)) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(k + 1);
        }
    };
    rec(0);
    return out;
}

int find_box(const std::vector<Box>& boxes, Box b)
{
    for (std::size_t k = 0; k < boxes.size(); ++k) {
        if (boxes[k] == b) return static_cast<int>(k);
    }
    return -1;
}

// Column-strict and row-weak constraints among the given boxes.
std::vector<Constraint> grid_constraints(const std::vector<Box>& boxes)
{
    std::vector<Constraint> cons;
    for (std::size_t k = 0; k < boxes.size(); ++k) {
        int up = find_box(boxes, {boxes[k].row - 1, boxes[k].col});
        if (up >= 0) cons.push_back({up, static_cast<int>(k), true});
        int left = find_box(boxes, {boxes[k].row, boxes[k].col - 1});
        if (left >= 0) cons.push_back({left, static_cast<int>(k), false});
    }
    return cons;
}

}  // namespace

std::vector<Tableau> semistandard_tableaux(const SkewShape& shape, int m)
{
    auto boxes = shape.boxes();
    return fill(boxes, grid_constraints(boxes), m);
}

std::vector<Tableau> cylindric_tableaux(const CylindricShape& shape, int m)
{
    auto boxes = shape.boxes();
    auto cons = grid_constraints(boxes);
    // Row condition across the period: (i, last) <= (i, last+1) = (i+s, first).
    auto cols = shape.reading_columns();
    const int last = cols.back().col, first = cols.front().col;
    for (std::size_t k = 0; k < boxes.size(); ++k) {
        if (boxes[k].col != last) continue;
        int right = find_box(boxes, {boxes[k].row + shape.s(), first});
        if (right >= 0) cons.push_back({static_cast<int>(k), right, false});
    }
    return fill(boxes, cons, m);
}

NCMonomial reading_word(const CylNetwork& net, const Tableau& t, int r)
{
    const auto& c = *net.comm;
    NCMonomial w = unit(c);
    for (std::size_t k = 0; k < t.boxes.size(); ++k) {
        const Box& b = t.boxes[k];
        const int T = t.entries[k];
        w = mono_mul(c, w, gen_mono(c, net.weight_index(T, b.row - b.col - T + r + 1)));
    }
    return w;
}

namespace {

NCLaurent tableau_sum(const CylNetwork& net, const std::vector<Tableau>& ts, int r)
{
    NCLaurent out(net.comm);
    for (auto& t : ts) {
        NCMonomial w = reading_word(net, t, r);
        out.add_term(w.e, EpsScalar::eps_pow(w.eps));
    }
    return out;
}

}  // namespace

NCLaurent loop_schur(const CylNetwork& net, const SkewShape& shape, int r)
{
    return tableau_sum(net, semistandard_tableaux(shape, net.m), r);
}

NCLaurent cylindric_loop_schur(const CylNetwork& net, const CylindricShape& shape, int r)
{
    if (net.n != shape.n()) throw std::invalid_argument("shape and network disagree on n");
    return tableau_sum(net, cylindric_tableaux(shape, net.m), r);
}

std::vector<Interval> column_intervals(const std::vector<ColumnRange>& cols, int r)
{
    std::vector<Interval> out;
    for (auto& c : cols) out.push_back({r - c.col + c.top, r - c.col + c.bot});
    return out;
}

NCLaurent cover_measurement(const CylNetwork& net, const SkewShape& shape, int r)
{
    return interval_measurement(net, column_intervals(shape.columns(), r), false);
}

NCLaurent base_measurement(const CylNetwork& net, const CylindricShape& shape, int r)
{
    if (net.n != shape.n()) throw std::invalid_argument("shape and network disagree on n");
    return interval_measurement(net, column_intervals(shape.reading_columns(), r), true);
}

int chi(int n, int z) { return mod(z, n) == 0 ? 1 : 0; }

int alpha_PP(int n, int a, int b, int c)
{
    if (a > b || b >= c) throw std::invalid_argument("alpha_PP needs a <= b < c");
    return 1 - chi(n, a - b - 1) - chi(n, b - c) + chi(n, a - c - 1);
}

int alpha_PQ(int n, int a, int b, int c, int d)
{
    if (a > b || c > d) throw std::invalid_argument("alpha_PQ needs nonempty intervals");
    if (!(c < a)) throw std::invalid_argument("alpha_PQ needs c < a");
    return chi(n, a - d - 1) + chi(n, a - c) - chi(n, b - c + 1);
}

bool pq_hypotheses(const CylNetwork& net, const HighwayPath& p, const HighwayPath& q)
{
    if (p.last_col() != net.m || q.last_col() != net.m) return false;
    if (!(q.first_col() < p.first_col())) return false;
    Interval sp = p.s_interval(), sq = q.s_interval();
    if (sp.size() <= 0 || sq.size() <= 0) return false;
    if (!(sq.a < sp.a)) return false;
    if (mod(p.end_wire() - q.end_wire(), net.n) == 0) return false;
    return paths_disjoint(p, q, net.n, true);
}

HighwayPath apply_m_k(const HighwayPath& p, int k)
{
    Interval s = p.s_interval();
    if (k < s.a || k > s.b) return p;
    auto picks = p.picks();
    const int j = picks[uz(k - s.a)].first;
    if (j - 1 < p.first_col()) return p;
    auto st = p.straight();
    if (st[uz(j - 1 - p.first_col())]) return p;
    st[uz(j - 1 - p.first_col())] = true;
    st[uz(j - p.first_col())] = false;
    return HighwayPath(p.first_col(), p.start_wire(), std::move(st));
}

int beta(int n, const std::vector<Interval>& spec)
{
    int t = 0;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.size(); ++j) {
            if (spec[i].b < spec[j].b) {
                t += -1 - chi(n, spec[j].a - spec[j].b - 1) + chi(n, spec[j].a - spec[i].b - 1);
            }
        }
    }
    return t;
}

std::vector<ETerm> expand_measurement_in_e(int n, int m, const std::vector<Interval>& spec)
{
    const int r = static_cast<int>(spec.size());
    for (int i = 0; i + 1 < r; ++i) {
        if (!(spec[uz(i)].a > spec[uz(i + 1)].a) || !(spec[uz(i)].b > spec[uz(i + 1)].b)) {
            throw std::invalid_argument("sources and sinks must decrease");
        }
    }
    if (r > 1 && (!(spec.back().a > spec.front().a - n) || !(spec.back().b > spec.front().b - n))) {
        throw std::invalid_argument("sources and sinks must lie within one period");
    }
    std::vector<ETerm> out;
    const int b0 = beta(n, spec);
    int bsum = 0;
    for (auto& s : spec) bsum += s.b;
    std::vector<int> sigma(uz(r));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        int sign = 1;
        for (int i = 0; i < r; ++i) {
            for (int j = i + 1; j < r; ++j) sign *= sigma[uz(i)] > sigma[uz(j)] ? -1 : 1;
        }
        // b'_i ranges over a_i - 1 .. a_i - 1 + m with b'_i = b_sigma(i) mod n.
        std::vector<Interval> cur(uz(r));
        std::function<void(int, int)> rec = [&](int i, int sum) {
            if (i == r) {
                if (sum != bsum) return;
                out.push_back({sign, beta(n, cur) - b0, cur});
                return;
            }
            const int a = spec[uz(i)].a;
            const int target = spec[uz(sigma[uz(i)])].b;
            for (int bp = a - 1; bp <= a - 1 + m; ++bp) {
                if (mod(bp - target, n) != 0) continue;
                cur[uz(i)] = {a, bp};
                rec(i + 1, sum + bp);
            }
        };
        rec(0, 0);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

NCLaurent evaluate_e_terms(const CylNetwork& net, const std::vector<ETerm>& terms)
{
    NCLaurent out(net.comm);
    for (auto& t : terms) {
        NCLaurent p = one(net.comm);
        for (auto& f : t.factors) p = p * e_interval(net, f.a, f.b);
        out += p.scaled(EpsScalar::eps_pow(t.eps, t.sign));
    }
    return out;
}

bool sinks_within_period(int n, const std::vector<Interval>& spec)
{
    for (std::size_t i = 0; i < spec.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.size(); ++j) {
            if (std::abs(spec[i].b - spec[j].b) >= n) return false;
        }
    }
    return true;
}

std::vector<std::vector<Interval>> cylindric_specs(int n, int m, int max_paths, int max_cells)
{
    std::vector<std::vector<Interval>> out;
    std::vector<Interval> cur;
    std::function<void(int)> rec = [&](int cells) {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_paths) return;
        const int a_hi = cur.empty() ? n : cur.back().a - 1;
        const int a_lo = cur.empty() ? 1 : cur.front().a - n + 1;
        for (int a = a_hi; a >= a_lo; --a) {
            for (int k = 0; k <= m && cells + k <= max_cells; ++k) {
                Interval iv{a, a + k - 1};
                if (!cur.empty() && !(iv.b < cur.back().b && iv.b > cur.front().b - n)) continue;
                cur.push_back(iv);
                rec(cells + k);
                cur.pop_back();
            }
        }
    };
    rec(0);
    return out;
}

std::string e_terms_str(const std::vector<ETerm>& terms)
{
    std::string s;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& t = terms[k];
        if (k == 0) s += t.sign < 0 ? "-" : "";
        else s += t.sign < 0 ? " - " : " + ";
        if (t.eps != 0) s += "eps^" + std::to_string(t.eps) + " ";
        for (auto& f : t.factors) s += "e(" + std::to_string(f.a) + "," + std::to_string(f.b) + ")";
    }
    return s;
}

YBTriple yb_move(const YBTriple& t)
{
    SkewExpr s = t.p + t.r;
    SkewExpr si = s.inv();
    return {SkewExpr::product({t.q, t.r, si}), s, SkewExpr::product({t.q, t.p, si})};
}

std::pair<SkewExpr, SkewExpr> yb_precondition(const YBTriple& t)
{
    return {SkewExpr::product({t.p, t.q, t.r}), SkewExpr::product({t.r, t.q, t.p})};
}

namespace {

std::optional<NCLaurent> as_laurent(const SkewExpr& e)
{
    switch (e.kind()) {
    case SkewExpr::Kind::Gen:
        return NCLaurent::generator(e.comm(), e.node().value);
    case SkewExpr::Kind::Eps:
        return NCLaurent::constant(e.comm(), EpsScalar::eps_pow(e.node().value));
    case SkewExpr::Kind::Poly:
        return e.node().poly;
    default:
        return std::nullopt;
    }
}

}  // namespace

std::optional<bool> yb_precondition_exact(const YBTriple& t)
{
    auto p = as_laurent(t.p), q = as_laurent(t.q), r = as_laurent(t.r);
    if (!p || !q || !r) return std::nullopt;
    return (*p) * (*q) * (*r) == (*r) * (*q) * (*p);
}

YBTriple yb_move_checked(const YBTriple& t, const OracleConfig& cfg)
{
    if (auto exact = yb_precondition_exact(t)) {
        if (!*exact) throw std::invalid_argument("Yang-Baxter move needs pqr = rqp");
        return yb_move(t);
    }
    auto [lhs, rhs] = yb_precondition(t);
    Verdict v = equal_skew(lhs, rhs, cfg);
    if (v.kind == Verdict::Kind::NotEqual) throw std::invalid_argument("Yang-Baxter move needs pqr = rqp");
    if (v.kind != Verdict::Kind::ProbablyEqual) throw std::runtime_error("could not certify pqr = rqp");
    return yb_move(t);
}

std::vector<std::pair<SkewExpr, SkewExpr>> yb_relations(const YBTriple& x, const YBTriple& y)
{
    return {
        {x.q * x.r, y.p * y.q},
        {x.p + x.r, y.q},
        {x.q, y.p + y.r},
        {x.q * x.p, y.r * y.q},
        {x.p * x.q, y.q * y.r},
    };
}

NCLaurent pq_loop_product(const CommPtr& c, int n, const std::vector<int>& gens)
{
    std::vector<std::pair<int, int>> w;
    for (int i = n; i >= 1; --i) w.push_back({gens[uz(i - 1)], 1});
    return NCLaurent::word(c, w);
}

SkewExpr r_parameter(const CommPtr& c, int n, int i, const std::vector<int>& p, const std::vector<int>& q)
{
    NCLaurent diff = pq_loop_product(c, n, p) - pq_loop_product(c, n, q);
    return SkewExpr::poly(diff) * SkewExpr::poly(kappa_eps(c, n, wrap(i, n), p, q)).inv();
}

LensPush push_lens_around(const CommPtr& c, int n, const std::vector<int>& p, const std::vector<int>& q)
{
    LensPush out;
    out.map = identity_skew(c);
    SkewExpr cur = r_parameter(c, n, n + 1, p, q);
    out.lens.push_back(cur);
    for (int i = n; i >= 1; --i) {
        const int pi = p[uz(i - 1)], qi = q[uz(i - 1)];
        YBTriple t = yb_move({cur, SkewExpr::gen(c, pi), SkewExpr::gen(c, qi)});
        out.map[uz(pi)] = t.p;
        out.map[uz(qi)] = t.q;
        cur = t.r;
        out.lens.push_back(cur);
    }
    return out;
}

LensPush push_lens_snake(const CommPtr& c, int n, int j)
{
    return push_lens_around(c, n, snake_column(*c, n, j), snake_column(*c, n, j + 1));
}

int HighwayGraph::add_edge()
{
    head_.push_back(-1);
    return static_cast<int>(head_.size()) - 1;
}

void HighwayGraph::add_vertex(int in_h, int in_v, int out_h, int out_v, const NCLaurent& weight)
{
    const int v = static_cast<int>(verts_.size());
    verts_.push_back({in_h, in_v, out_h, out_v, weight});
    head_.at(uz(in_h)) = v;
    head_.at(uz(in_v)) = v;
}

std::vector<std::pair<std::vector<int>, NCLaurent>> HighwayGraph::paths(int s, int t) const
{
    std::vector<std::pair<std::vector<int>, NCLaurent>> out;
    std::vector<int> cur;
    std::function<void(int, const NCLaurent&)> rec = [&](int e, const NCLaurent& w) {
        cur.push_back(e);
        if (e == t) {
            out.push_back({cur, w});
        } else if (int v = head_[uz(e)]; v >= 0) {
            const V& x = verts_[uz(v)];
            if (e == x.in_h) {
                rec(x.out_h, w * x.w);
                rec(x.out_v, w);
            } else {
                rec(x.out_h, w);
            }
        }
        cur.pop_back();
    };
    rec(s, one(comm_));
    return out;
}

NCLaurent HighwayGraph::measurement(const std::vector<std::pair<int, int>>& ends) const
{
    std::vector<std::vector<std::pair<std::vector<int>, NCLaurent>>> cands;
    for (auto [s, t] : ends) cands.push_back(paths(s, t));
    NCLaurent out(comm_);
    std::vector<char> used(head_.size(), 0);
    std::function<void(std::size_t, const NCLaurent&)> rec = [&](std::size_t k, const NCLaurent& acc) {
        if (k == cands.size()) {
            out += acc;
            return;
        }
        for (auto& [edges, w] : cands[k]) {
            bool ok = std::none_of(edges.begin(), edges.end(), [&](int e) { return used[uz(e)]; });
            if (!ok) continue;
            for (int e : edges) used[uz(e)] = 1;
            rec(k + 1, acc * w);
            for (int e : edges) used[uz(e)] = 0;
        }
    };
    rec(0, one(comm_));
    return out;
}

namespace {

struct LensSpec {
    int col, wire;
    NCLaurent x;
};

CoverWindow build_window(const CommPtr& c, int n, int m, int lo, int hi, const std::optional<LensSpec>& lens)
{
    if (hi < lo) throw std::invalid_argument("empty window");
    CoverWindow w{HighwayGraph(c), lo, hi, {}, {}};
    auto& g = w.graph;
    const int rows = hi - lo + 1;
    // H[j][i-lo], j = 0..m; V[j][i-lo], j = 1..m, i = lo..hi+1 (V(j, hi+1) enters from below).
    std::vector<std::vector<int>> H(uz(m + 1), std::vector<int>(uz(rows)));
    std::vector<std::vector<int>> V(uz(m + 1), std::vector<int>(uz(rows + 1), -1));
    for (int j = 0; j <= m; ++j) {
        for (int k = 0; k < rows; ++k) H[uz(j)][uz(k)] = g.add_edge();
    }
    for (int j = 1; j <= m; ++j) {
        for (int k = 0; k <= rows; ++k) V[uz(j)][uz(k)] = g.add_edge();
    }
    // in_v of vertex (j, i) is V(j, i+1) unless a lens redirects it.
    std::map<std::pair<int, int>, int> in_v;
    for (int j = 1; j <= m; ++j) {
        for (int i = lo; i <= hi; ++i) in_v[{j, i}] = V[uz(j)][uz(i + 1 - lo)];
    }
    if (lens) {
        const int j = lens->col, i = lens->wire;
        if (j < 1 || j >= m || i <= lo || i > hi) throw std::invalid_argument("lens outside the window");
        const int a = V[uz(j)][uz(i - lo)], b = V[uz(j + 1)][uz(i - lo)];
        const int e1 = g.add_edge(), e2 = g.add_edge(), f1 = g.add_edge(), f2 = g.add_edge();
        g.add_vertex(a, b, e2, e1, lens->x);
        g.add_vertex(e1, e2, f2, f1, -lens->x);
        in_v[{j, i - 1}] = f1;
        in_v[{j + 1, i - 1}] = f2;
    }
    for (int j = 1; j <= m; ++j) {
        for (int i = lo; i <= hi; ++i) {
            const int k = i - lo;
            g.add_vertex(H[uz(j - 1)][uz(k)], in_v[{j, i}], H[uz(j)][uz(k)], V[uz(j)][uz(k)],
                         NCLaurent::generator(c, snake_name(j, wrap(i, n))));
        }
    }
    for (int k = 0; k < rows; ++k) {
        w.source_edges.push_back(H[0][uz(k)]);
        w.sink_edges.push_back(H[uz(m)][uz(k)]);
    }
    return w;
}

}  // namespace

CoverWindow cover_window(const CommPtr& c, int n, int m, int lo, int hi)
{
    return build_window(c, n, m, lo, hi, std::nullopt);
}

CoverWindow cover_window_with_lens(const CommPtr& c, int n, int m, int lo, int hi, int col, int wire,
                                   const NCLaurent& x)
{
    return build_window(c, n, m, lo, hi, LensSpec{col, wire, x});
}

}  // namespace clr
