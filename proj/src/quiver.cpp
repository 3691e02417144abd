#include "clr/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace clr {

int wrap(int i, int n) { return ((i - 1) % n + n) % n + 1; }

std::string Vertex::str() const
{
    std::string s = std::to_string(j) + ":" + std::to_string(i);
    if (is_arrow()) s += ">" + std::to_string(tj) + ":" + std::to_string(ti);
    return s;
}

Vertex Vertex::parse(const std::string& text)
{
    auto grid_part = [&](const std::string& s) {
        auto c = s.find(':');
        if (c == std::string::npos) throw std::invalid_argument("bad vertex label '" + text + "'");
        std::size_t used = 0;
        int j = std::stoi(s.substr(0, c), &used);
        if (used != c) throw std::invalid_argument("bad vertex label '" + text + "'");
        std::string rest = s.substr(c + 1);
        int i = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("bad vertex label '" + text + "'");
        return grid(j, i);
    };
    std::string s;
    for (char ch : text) {
        if (ch != ' ') s += ch;
    }
    auto gt = s.find('>');
    if (gt == std::string::npos) return grid_part(s);
    return arrow(grid_part(s.substr(0, gt)), grid_part(s.substr(gt + 1)));
}

VertexPermutation VertexPermutation::transposition(Vertex a, Vertex b)
{
    VertexPermutation p;
    p.set(a, b);
    p.set(b, a);
    return p;
}

Vertex VertexPermutation::operator()(const Vertex& v) const
{
    auto it = map_.find(v);
    return it == map_.end() ? v : it->second;
}

VertexPermutation VertexPermutation::then(const VertexPermutation& next) const
{
    VertexPermutation r;
    std::set<Vertex> support;
    for (auto& [a, b] : map_) support.insert(a);
    for (auto& [a, b] : next.map_) support.insert(a);
    for (auto& v : support) {
        Vertex w = next((*this)(v));
        if (w != v) r.set(v, w);
    }
    return r;
}

bool VertexPermutation::is_bijection() const
{
    std::set<Vertex> dom, img;
    for (auto& [a, b] : map_) {
        dom.insert(a);
        img.insert(b);
    }
    return dom == img && img.size() == map_.size();
}

bool VertexPermutation::is_identity() const
{
    for (auto& [a, b] : map_) {
        if (a != b) return false;
    }
    return true;
}

ExchangeMatrix::ExchangeMatrix(std::vector<Vertex> labels, std::vector<bool> frozen)
    : labels_(std::move(labels)), frozen_(std::move(frozen))
{
    if (frozen_.size() != labels_.size()) throw std::invalid_argument("frozen flags size mismatch");
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        if (!index_.emplace(labels_[k], static_cast<int>(k)).second) {
            throw std::invalid_argument("duplicate vertex label " + labels_[k].str());
        }
    }
    b_.assign(labels_.size() * labels_.size(), 0);
}

int ExchangeMatrix::index(const Vertex& v) const
{
    auto it = index_.find(v);
    if (it == index_.end()) throw std::out_of_range("unknown vertex " + v.str());
    return it->second;
}

std::vector<int> ExchangeMatrix::mutable_indices() const
{
    std::vector<int> r;
    for (int k = 0; k < size(); ++k) {
        if (!is_frozen(k)) r.push_back(k);
    }
    return r;
}

void ExchangeMatrix::add_arrows(int u, int v, int count)
{
    if (is_frozen(u) && is_frozen(v)) return;
    const int n = size();
    b_[static_cast<std::size_t>(u * n + v)] += count;
    b_[static_cast<std::size_t>(v * n + u)] -= count;
}

std::vector<int> mutate_matrix(const std::vector<int>& b, int n, int k)
{
    if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
    std::vector<int> r(b.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int bij = b[static_cast<std::size_t>(i * n + j)];
            if (i == k || j == k) {
                r[static_cast<std::size_t>(i * n + j)] = -bij;
                continue;
            }
            const int bik = b[static_cast<std::size_t>(i * n + k)];
            const int bkj = b[static_cast<std::size_t>(k * n + j)];
            r[static_cast<std::size_t>(i * n + j)] = bij + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
        }
    }
    return r;
}

ExchangeMatrix ExchangeMatrix::mutate(int k) const
{
    if (is_frozen(k)) throw FrozenVertexError("cannot mutate at frozen vertex " + label(k).str());
    ExchangeMatrix r = *this;
    r.b_ = mutate_matrix(b_, size(), k);
    const int n = size();
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (is_frozen(u) && is_frozen(v)) r.b_[static_cast<std::size_t>(u * n + v)] = 0;
        }
    }
    return r;
}

ExchangeMatrix ExchangeMatrix::permuted(const VertexPermutation& sigma) const
{
    ExchangeMatrix r = *this;
    const int n = size();
    for (int u = 0; u < n; ++u) {
        int su = index(sigma(label(u)));
        if (is_frozen(u) != is_frozen(su)) throw std::invalid_argument("permutation mixes frozen and mutable");
        for (int v = 0; v < n; ++v) {
            int sv = index(sigma(label(v)));
            r.b_[static_cast<std::size_t>(su * n + sv)] = b(u, v);
        }
    }
    return r;
}

ExchangeMatrix ExchangeMatrix::restricted(const std::vector<Vertex>& keep) const
{
    std::vector<bool> fr;
    for (auto& v : keep) fr.push_back(is_frozen(index(v)));
    ExchangeMatrix r(keep, fr);
    const int n = r.size();
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) r.b_[static_cast<std::size_t>(u * n + v)] = b(keep[static_cast<std::size_t>(u)], keep[static_cast<std::size_t>(v)]);
    }
    return r;
}

std::vector<ExchangeMatrix::Arrow> ExchangeMatrix::arrows() const
{
    std::vector<Arrow> r;
    for (int u = 0; u < size(); ++u) {
        for (int v = 0; v < size(); ++v) {
            if (b(u, v) > 0) r.push_back({label(u), label(v), b(u, v)});
        }
    }
    return r;
}

std::string ExchangeMatrix::export_text() const
{
    std::ostringstream os;
    for (auto& a : arrows()) {
        for (int c = 0; c < a.count; ++c) os << a.from.str() << " -> " << a.to.str() << "\n";
    }
    return os.str();
}

bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b)
{
    if (a.size() != b.size()) return false;
    for (int u = 0; u < a.size(); ++u) {
        if (!b.contains(a.label(u))) return false;
        if (a.is_frozen(u) != b.is_frozen(b.index(a.label(u)))) return false;
    }
    for (int u = 0; u < a.size(); ++u) {
        const int bu = b.index(a.label(u));
        for (int v = 0; v < a.size(); ++v) {
            if (a.is_frozen(u) && a.is_frozen(v)) continue;
            if (a.b(u, v) != b.b(bu, b.index(a.label(v)))) return false;
        }
    }
    return true;
}

namespace {

void check_params(int n, int m)
{
    if (n < 2 || m < 1) throw std::invalid_argument("Q_{n,m} needs n >= 2 and m >= 1");
}

// Arrows of Q_{n,m}: (j,i)->(j,i+1), (j,i)->(j-1,i), (j,i)->(j+1,i-1).
std::vector<std::pair<Vertex, Vertex>> grid_arrows(int n, int m)
{
    std::vector<std::pair<Vertex, Vertex>> r;
    for (int j = 0; j <= m; ++j) {
        for (int i = 1; i <= n; ++i) {
            r.push_back({Vertex::grid(j, i), Vertex::grid(j, wrap(i + 1, n))});
            if (j >= 1) r.push_back({Vertex::grid(j, i), Vertex::grid(j - 1, i)});
            if (j < m) r.push_back({Vertex::grid(j, i), Vertex::grid(j + 1, wrap(i - 1, n))});
        }
    }
    return r;
}

std::vector<Vertex> grid_labels(int n, int m)
{
    std::vector<Vertex> v;
    for (int j = 0; j <= m; ++j) {
        for (int i = 1; i <= n; ++i) v.push_back(Vertex::grid(j, i));
    }
    return v;
}

ExchangeMatrix enriched(int n, int m, bool primed)
{
    check_params(n, m);
    ExchangeMatrix q = build_Q(n, m);
    std::vector<Vertex> labels = grid_labels(n, m);
    std::vector<bool> frozen(labels.size(), false);
    std::vector<ExchangeMatrix::Arrow> arrows = q.arrows();
    std::vector<ExchangeMatrix::Arrow> kept;
    for (auto& a : arrows) {
        // Primed variant keeps only the diagonal arrows (j,i) -> (j+1,i-1).
        if (primed && a.to.j != a.from.j + 1) continue;
        for (int c = 0; c < a.count; ++c) {
            labels.push_back(Vertex::arrow(a.from, a.to));
            frozen.push_back(true);
        }
        kept.push_back(a);
    }
    ExchangeMatrix r(labels, frozen);
    for (auto& a : arrows) r.add_arrows(a.from, a.to, a.count);
    for (auto& a : kept) {
        Vertex v = Vertex::arrow(a.from, a.to);
        r.add_arrows(a.to, v, 1);
        r.add_arrows(v, a.from, 1);
    }
    return r;
}

}  // namespace

ExchangeMatrix build_Q(int n, int m)
{
    check_params(n, m);
    auto labels = grid_labels(n, m);
    ExchangeMatrix q(labels, std::vector<bool>(labels.size(), false));
    for (auto& [a, b] : grid_arrows(n, m)) q.add_arrows(a, b, 1);
    return q;
}

ExchangeMatrix build_Q_tilde(int n, int m) { return enriched(n, m, false); }
ExchangeMatrix build_Q_tilde_prime(int n, int m) { return enriched(n, m, true); }

std::vector<ExchangeMatrix::Arrow> sorted_arrows(const ExchangeMatrix& q)
{
    auto a = q.arrows();
    std::sort(a.begin(), a.end());
    return a;
}

std::vector<ExchangeMatrix::Arrow> structural_oracle_Ai(int n, int i)
{
    if (n < 3 || i < 0 || i > n - 2) throw std::invalid_argument("structural oracle needs n >= 3, 0 <= i <= n-2");
    if (i == 0) return sorted_arrows(build_Q(n, 2));
    auto M = [&](int k) { return Vertex::grid(1, wrap(k, n)); };
    auto Mm = [&](int k) { return Vertex::grid(0, wrap(k, n)); };
    auto Mp = [&](int k) { return Vertex::grid(2, wrap(k, n)); };
    std::map<std::pair<Vertex, Vertex>, int> acc;
    auto arrow = [&](Vertex a, Vertex b) { acc[{a, b}] += 1; };

    // Within M.
    for (int k = 1; k < i; ++k) arrow(M(k), M(k + 1));
    if (i < n - 2) {
        arrow(M(i), M(n));
        arrow(M(i + 1), M(i));
        for (int k = i + 1; k < n; ++k) arrow(M(k), M(k + 1));
        arrow(M(n), M(i + 1));
    } else {
        arrow(M(n - 2), M(n));
        arrow(M(n - 1), M(n - 2));
    }
    // Between M and M^-.
    arrow(Mm(1), M(1));
    for (int k = 1; k <= i; ++k) arrow(M(k), Mm(k + 1));
    for (int k = 3; k <= i + 1; ++k) arrow(Mm(k), M(k - 2));
    for (int k = i + 2; k <= n; ++k) arrow(M(k), Mm(k));
    for (int k = i + 2; k <= n; ++k) arrow(Mm(k), M(k - 1));
    // Between M and M^+.
    arrow(Mp(n), M(1));
    for (int k = 1; k <= i; ++k) arrow(M(k), Mp(k));
    for (int k = 2; k <= i; ++k) arrow(Mp(k), M(k - 1));
    for (int k = i + 2; k <= n; ++k) arrow(M(k), Mp(k - 1));
    for (int k = i + 1; k <= n - 1; ++k) arrow(Mp(k), M(k));
    // Within M^- and M^+.
    for (int k = 2; k <= n; ++k) arrow(Mm(k), Mm(k + 1));
    for (int k = 1; k < n; ++k) arrow(Mp(k), Mp(k + 1));
    // Between M^- and M^+.
    arrow(Mp(1), Mm(1));
    arrow(Mm(2), Mp(n));

    std::vector<ExchangeMatrix::Arrow> r;
    for (auto& [ab, c] : acc) r.push_back({ab.first, ab.second, c});
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace clr
