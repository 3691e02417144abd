#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace clr {

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using FpVec = std::vector<std::uint64_t>;

// Square matrix over F_p stored either as CSR (sparse) or row-major (dense).
// Products switch to dense storage once rows fill up.
class FpMatrix {
public:
    FpMatrix() = default;
    static FpMatrix zero(int n, std::uint64_t p);
    static FpMatrix identity(int n, std::uint64_t p, std::uint64_t c = 1);
    // Row r has the single entry val[r] at column col[r].
    static FpMatrix monomial(std::uint64_t p, const std::vector<int>& col, const FpVec& val);
    static FpMatrix dense_from(int n, std::uint64_t p, FpVec a);

    int dim() const { return n_; }
    std::uint64_t modulus() const { return p_; }
    bool is_dense() const { return dense_; }
    bool is_zero() const;
    std::uint64_t at(int r, int c) const;
    std::size_t nonzeros() const;

    FpMatrix to_dense() const;
    FpVec apply(const FpVec& v) const;

    friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
    friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
    FpMatrix scaled(std::uint64_t c) const;
    FpMatrix inverse() const;  // throws SingularMatrix

    friend bool operator==(const FpMatrix& a, const FpMatrix& b);

private:
    int n_ = 0;
    std::uint64_t p_ = 0;
    bool dense_ = false;
    std::vector<int> ptr_, col_;  // CSR
    FpVec val_;                   // CSR values or dense entries
};

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
bool vec_is_zero(const FpVec& v);

}  // namespace clr
