#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clr/fpmat.hpp"
#include "clr/skew.hpp"

namespace clr {

struct SingularInversion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// C^T J(d) C = lambda with J(d) block diagonal [[0,d_t],[-d_t,0]] followed by zeros.
struct SkewNormalForm {
    int size = 0;
    std::vector<std::int64_t> C;  // row-major size x size
    std::vector<std::int64_t> d;  // one multiplier per block

    int blocks() const { return static_cast<int>(d.size()); }
    std::int64_t c(int r, int col) const { return C[static_cast<std::size_t>(r * size + col)]; }
    // (C^T J(d) C) as a row-major matrix.
    std::vector<std::int64_t> reconstruct() const;
};

SkewNormalForm skew_normal_form(const CommutationMatrix& lambda);

// Clock/shift realization of a quantum torus at eps = zeta over F_p.
struct WeylAssignment {
    CommPtr comm;
    std::uint64_t p = 0;
    unsigned L = 0;
    std::uint64_t zeta = 0;
    int dim = 1;
    std::vector<std::int64_t> d;
    // exps[a] has 2 entries per block: clock and shift exponents of generator a.
    std::vector<std::vector<std::int64_t>> exps;
    std::vector<std::uint64_t> scalars;
    std::vector<FpMatrix> mats;
    std::vector<FpMatrix> inv_mats;
    // Row r of generator a (or its inverse) has its entry at cols[a][r].
    std::vector<std::vector<int>> cols, inv_cols;
    std::vector<FpVec> vals, inv_vals;

    // Rebuild mats from the recorded data.
    void build();
};

WeylAssignment weyl_assignment(const CommPtr& lambda, std::uint64_t p, unsigned L, std::uint64_t zeta, std::mt19937_64& rng);
// Check g_a g_b = zeta^{lambda_ab} g_b g_a on up to `samples` random pairs (all pairs if samples <= 0).
bool verify_assignment(const WeylAssignment& w, int samples, std::mt19937_64& rng);

// Evaluation of an expression whose registry is w.comm or a registry that
// contains w.comm's generators (by name).
class WeylEvaluator {
public:
    WeylEvaluator(const WeylAssignment& w, const CommPtr& expr_comm);
    FpMatrix matrix(const SkewExpr& e);
    FpVec apply(const SkewExpr& e, const FpVec& v);

private:
    FpMatrix poly_matrix(const NCLaurent& p);
    std::uint64_t eps_value(const EpsScalar& s) const;
    std::uint64_t zeta_pow(std::int64_t k) const;

    const WeylAssignment& w_;
    std::vector<int> local_;  // expression generator -> assignment index, or -1
    // Keeps the node alive so its address cannot be reused while memoized.
    std::unordered_map<const SkewExpr::Node*, std::pair<SkewExpr, FpMatrix>> memo_;
};

struct OracleConfig {
    std::vector<unsigned> root_orders{5, 7, 11};
    int trials = 6;
    unsigned prime_bits = 61;
    std::uint64_t seed = 1;
    int max_retries = 5;
    // Root orders with L^k above this are replaced by smaller fallback orders.
    std::size_t max_dim = 400;
    bool restrict_support = true;
    int workers = 1;
};

// Everything needed to replay one trial.
struct Witness {
    std::vector<std::string> generators;
    std::vector<int> lambda;
    std::uint64_t p = 0;
    unsigned L = 0;
    std::uint64_t zeta = 0;
    std::vector<std::int64_t> d;
    std::vector<std::vector<std::int64_t>> exps;
    std::vector<std::uint64_t> scalars;
    std::uint64_t vector_seed = 0;

    std::string to_json() const;
    static Witness from_json(const std::string& text);
};

struct Verdict {
    enum class Kind { ProbablyEqual, NotEqual, ExhaustedRetries };
    Kind kind = Kind::ProbablyEqual;
    int trials = 0;
    std::vector<unsigned> root_orders;
    int dimension_blocks = 0;
    int retries = 0;
    int failing_pair = -1;
    std::optional<Witness> witness;

    bool equal() const { return kind == Kind::ProbablyEqual; }
    std::string kind_name() const;
};

// Root orders used for a torus with k Weyl pairs and block multipliers d.
std::vector<unsigned> plan_root_orders(const OracleConfig& cfg, int k, const std::vector<std::int64_t>& d);

Verdict equal_skew(const SkewExpr& a, const SkewExpr& b, const OracleConfig& cfg);
// Several identities at once, sharing the per-trial specialization.
Verdict equal_skew_all(const std::vector<std::pair<SkewExpr, SkewExpr>>& pairs, const OracleConfig& cfg);
// True when the witness reproduces a nonzero difference.
bool replay_witness(const SkewExpr& a, const SkewExpr& b, const Witness& w);

}  // namespace clr
