#pragma once

#include <memory>
#include <vector>

#include "clr/qtorus.hpp"
#include "clr/scalar.hpp"

namespace clr {

// Element of the skew field of fractions of a quantum torus, kept as an
// expression DAG.  Nodes are immutable and shared.
class SkewExpr {
public:
    enum class Kind { Gen, Eps, Poly, Add, Mul, Inv };

    struct Node {
        Kind kind;
        CommPtr comm;
        int value = 0;  // generator index or eps exponent
        NCLaurent poly;
        std::vector<SkewExpr> kids;
    };

    SkewExpr() = default;

    static SkewExpr gen(const CommPtr& c, int a);
    static SkewExpr gen(const CommPtr& c, const std::string& name) { return gen(c, c->index(name)); }
    static SkewExpr eps_pow(const CommPtr& c, int k);
    static SkewExpr poly(const NCLaurent& p);
    static SkewExpr constant(const CommPtr& c, std::int64_t v);
    static SkewExpr sum(const std::vector<SkewExpr>& terms);
    static SkewExpr product(const std::vector<SkewExpr>& factors);

    bool valid() const { return node_ != nullptr; }
    Kind kind() const { return node_->kind; }
    const Node& node() const { return *node_; }
    const Node* id() const { return node_.get(); }
    const CommPtr& comm() const { return node_->comm; }

    SkewExpr inv() const;
    SkewExpr pow(int k) const;
    friend SkewExpr operator+(const SkewExpr& a, const SkewExpr& b);
    friend SkewExpr operator-(const SkewExpr& a, const SkewExpr& b);
    friend SkewExpr operator-(const SkewExpr& a);
    friend SkewExpr operator*(const SkewExpr& a, const SkewExpr& b);

    // Number of distinct nodes.
    std::size_t dag_size() const;
    // Generators occurring anywhere in the DAG.
    std::vector<int> support() const;

private:
    explicit SkewExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static SkewExpr make(Node n);

    std::shared_ptr<const SkewExpr::Node> node_;
};

// Same tree up to sharing.
bool structurally_equal(const SkewExpr& a, const SkewExpr& b);

// Replace generator a by images[a]; images live over a common target registry.
SkewExpr substitute(const SkewExpr& e, const std::vector<SkewExpr>& images);
// Same for several expressions; shared subexpressions are substituted once.
std::vector<SkewExpr> substitute_all(const std::vector<SkewExpr>& es, const std::vector<SkewExpr>& images);

// Value at eps = 1 with commuting generators; point[a] is the value of generator a.
// Throws ArithmeticError on division by zero.
Fp eval_classical(const SkewExpr& e, const std::vector<Fp>& point);

}  // namespace clr
