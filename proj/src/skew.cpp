#include "clr/skew.hpp"

#include <set>
#include <unordered_map>
#include <unordered_set>

namespace clr {

SkewExpr SkewExpr::make(Node n)
{
    if (!n.comm) throw std::invalid_argument("expression without generator registry");
    return SkewExpr(std::make_shared<const Node>(std::move(n)));
}

SkewExpr SkewExpr::gen(const CommPtr& c, int a)
{
    if (a < 0 || a >= c->size()) throw std::out_of_range("generator index out of range");
    return make({Kind::Gen, c, a, {}, {}});
}

SkewExpr SkewExpr::eps_pow(const CommPtr& c, int k) { return make({Kind::Eps, c, k, {}, {}}); }

SkewExpr SkewExpr::poly(const NCLaurent& p) { return make({Kind::Poly, p.comm(), 0, p, {}}); }

SkewExpr SkewExpr::constant(const CommPtr& c, std::int64_t v) { return poly(NCLaurent::constant(c, EpsScalar(v))); }

namespace {

void check_same(const SkewExpr& a, const SkewExpr& b)
{
    if (a.comm() != b.comm() && !(*a.comm() == *b.comm())) throw RegistryMismatch("expressions over different registries");
}

}  // namespace

SkewExpr SkewExpr::sum(const std::vector<SkewExpr>& terms)
{
    if (terms.empty()) throw std::invalid_argument("empty sum");
    if (terms.size() == 1) return terms.front();
    std::vector<SkewExpr> kids;
    for (auto& t : terms) {
        check_same(terms.front(), t);
        if (t.kind() == Kind::Add) kids.insert(kids.end(), t.node().kids.begin(), t.node().kids.end());
        else kids.push_back(t);
    }
    return make({Kind::Add, terms.front().comm(), 0, {}, std::move(kids)});
}

SkewExpr SkewExpr::product(const std::vector<SkewExpr>& factors)
{
    if (factors.empty()) throw std::invalid_argument("empty product");
    if (factors.size() == 1) return factors.front();
    std::vector<SkewExpr> kids;
    for (auto& f : factors) {
        check_same(factors.front(), f);
        if (f.kind() == Kind::Mul) kids.insert(kids.end(), f.node().kids.begin(), f.node().kids.end());
        else kids.push_back(f);
    }
    return make({Kind::Mul, factors.front().comm(), 0, {}, std::move(kids)});
}

SkewExpr SkewExpr::inv() const
{
    if (kind() == Kind::Inv) return node().kids.front();
    if (kind() == Kind::Eps) return eps_pow(comm(), -node().value);
    return make({Kind::Inv, comm(), 0, {}, {*this}});
}

SkewExpr SkewExpr::pow(int k) const
{
    if (k == 0) return constant(comm(), 1);
    SkewExpr b = k < 0 ? inv() : *this;
    std::vector<SkewExpr> f(static_cast<std::size_t>(k < 0 ? -k : k), b);
    return product(f);
}

SkewExpr operator+(const SkewExpr& a, const SkewExpr& b) { return SkewExpr::sum({a, b}); }
SkewExpr operator-(const SkewExpr& a) { return SkewExpr::product({SkewExpr::constant(a.comm(), -1), a}); }
SkewExpr operator-(const SkewExpr& a, const SkewExpr& b) { return a + (-b); }
SkewExpr operator*(const SkewExpr& a, const SkewExpr& b) { return SkewExpr::product({a, b}); }

std::size_t SkewExpr::dag_size() const
{
    std::unordered_set<const Node*> seen;
    std::vector<const Node*> stack{id()};
    while (!stack.empty()) {
        const Node* n = stack.back();
        stack.pop_back();
        if (!seen.insert(n).second) continue;
        for (auto& k : n->kids) stack.push_back(k.id());
    }
    return seen.size();
}

std::vector<int> SkewExpr::support() const
{
    std::unordered_set<const Node*> seen;
    std::set<int> gens;
    std::vector<const Node*> stack{id()};
    while (!stack.empty()) {
        const Node* n = stack.back();
        stack.pop_back();
        if (!seen.insert(n).second) continue;
        if (n->kind == Kind::Gen) gens.insert(n->value);
        if (n->kind == Kind::Poly) {
            for (int a : n->poly.support()) gens.insert(a);
        }
        for (auto& k : n->kids) stack.push_back(k.id());
    }
    return {gens.begin(), gens.end()};
}

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<const void*, const void*>& p) const
    {
        return std::hash<const void*>()(p.first) * 31 + std::hash<const void*>()(p.second);
    }
};

bool struct_eq(const SkewExpr& a, const SkewExpr& b, std::unordered_set<std::pair<const void*, const void*>, PairHash>& done)
{
    if (a.id() == b.id()) return true;
    if (done.count({a.id(), b.id()})) return true;
    auto& x = a.node();
    auto& y = b.node();
    if (x.kind != y.kind || x.value != y.value || x.kids.size() != y.kids.size()) return false;
    if (x.kind == SkewExpr::Kind::Poly && !(x.poly == y.poly)) return false;
    for (std::size_t i = 0; i < x.kids.size(); ++i) {
        if (!struct_eq(x.kids[i], y.kids[i], done)) return false;
    }
    done.insert({a.id(), b.id()});
    return true;
}

}  // namespace

bool structurally_equal(const SkewExpr& a, const SkewExpr& b)
{
    std::unordered_set<std::pair<const void*, const void*>, PairHash> done;
    return struct_eq(a, b, done);
}

std::vector<SkewExpr> substitute_all(const std::vector<SkewExpr>& es, const std::vector<SkewExpr>& images)
{
    if (es.empty()) return {};
    if (static_cast<int>(images.size()) != es.front().comm()->size()) throw std::invalid_argument("one image per generator required");
    for (auto& e : es) check_same(es.front(), e);
    const CommPtr target = images.empty() ? es.front().comm() : images.front().comm();
    std::unordered_map<const SkewExpr::Node*, SkewExpr> memo;
    std::vector<SkewExpr> inv_images(images.size());

    auto image_pow = [&](int a, int k) {
        auto ua = static_cast<std::size_t>(a);
        if (k > 0) return images[ua].pow(k);
        if (!inv_images[ua].valid()) inv_images[ua] = images[ua].inv();
        return inv_images[ua].pow(-k);
    };

    auto rec = [&](auto& self, const SkewExpr& x) -> SkewExpr {
        auto it = memo.find(x.id());
        if (it != memo.end()) return it->second;
        const auto& n = x.node();
        SkewExpr r;
        switch (n.kind) {
        case SkewExpr::Kind::Gen:
            r = images[static_cast<std::size_t>(n.value)];
            break;
        case SkewExpr::Kind::Eps:
            r = SkewExpr::eps_pow(target, n.value);
            break;
        case SkewExpr::Kind::Poly: {
            std::vector<SkewExpr> terms;
            for (auto& [ex, c] : n.poly.terms()) {
                std::vector<SkewExpr> f;
                if (!(c == EpsScalar(1))) f.push_back(SkewExpr::poly(NCLaurent::constant(target, c)));
                for (std::size_t a = 0; a < ex.size(); ++a) {
                    if (ex[a]) f.push_back(image_pow(static_cast<int>(a), ex[a]));
                }
                if (f.empty()) f.push_back(SkewExpr::constant(target, 1));
                terms.push_back(SkewExpr::product(f));
            }
            r = terms.empty() ? SkewExpr::constant(target, 0) : SkewExpr::sum(terms);
            break;
        }
        case SkewExpr::Kind::Add:
        case SkewExpr::Kind::Mul: {
            std::vector<SkewExpr> k;
            for (auto& c : n.kids) k.push_back(self(self, c));
            r = n.kind == SkewExpr::Kind::Add ? SkewExpr::sum(k) : SkewExpr::product(k);
            break;
        }
        case SkewExpr::Kind::Inv:
            r = self(self, n.kids.front()).inv();
            break;
        }
        memo.emplace(x.id(), r);
        return r;
    };
    std::vector<SkewExpr> out;
    out.reserve(es.size());
    for (auto& e : es) out.push_back(rec(rec, e));
    return out;
}

SkewExpr substitute(const SkewExpr& e, const std::vector<SkewExpr>& images) { return substitute_all({e}, images).front(); }

Fp eval_classical(const SkewExpr& e, const std::vector<Fp>& point)
{
    if (point.empty()) throw std::invalid_argument("empty evaluation point");
    const std::uint64_t p = point.front().p;
    std::unordered_map<const SkewExpr::Node*, Fp> memo;
    auto rec = [&](auto& self, const SkewExpr& x) -> Fp {
        auto it = memo.find(x.id());
        if (it != memo.end()) return it->second;
        const auto& n = x.node();
        Fp r(0, p);
        switch (n.kind) {
        case SkewExpr::Kind::Gen:
            r = point.at(static_cast<std::size_t>(n.value));
            break;
        case SkewExpr::Kind::Eps:
            r = Fp(1, p);
            break;
        case SkewExpr::Kind::Poly:
            for (auto& [ex, c] : n.poly.terms()) {
                Fp t = Fp::from_int(c.at_one(), p);
                for (std::size_t a = 0; a < ex.size(); ++a) {
                    if (ex[a]) {
                        if (ex[a] < 0 && point[a].is_zero()) throw ArithmeticError("division by zero");
                        t *= point[a].pow(ex[a]);
                    }
                }
                r += t;
            }
            break;
        case SkewExpr::Kind::Add:
            for (auto& c : n.kids) r += self(self, c);
            break;
        case SkewExpr::Kind::Mul:
            r = Fp(1, p);
            for (auto& c : n.kids) r *= self(self, c);
            break;
        case SkewExpr::Kind::Inv: {
            Fp v = self(self, n.kids.front());
            if (v.is_zero()) throw ArithmeticError("division by zero");
            r = v.inv();
            break;
        }
        }
        memo.emplace(x.id(), r);
        return r;
    };
    return rec(rec, e);
}

}  // namespace clr
