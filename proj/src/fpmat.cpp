#include "clr/fpmat.hpp"

#include <algorithm>

#include "clr/scalar.hpp"

namespace clr {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 add_mod(u64 a, u64 b, u64 p)
{
    u64 s = a + b;
    return s >= p ? s - p : s;
}

u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

bool vec_is_zero(const FpVec& v)
{
    return std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; });
}

namespace {

// Number of 122-bit products that can be summed in a u128 before reducing.
int lazy_chunk(u64 p)
{
    u128 sq = static_cast<u128>(p - 1) * (p - 1);
    u128 c = ~u128{0} / (sq ? sq : 1);
    return c > 256 ? 256 : static_cast<int>(c);
}

// Precomputed b with floor(b * 2^64 / p) for repeated multiplication by b.
struct Shoup {
    u64 b, bs, p;
    Shoup(u64 b_, u64 p_) : b(b_), bs(static_cast<u64>((static_cast<u128>(b_) << 64) / p_)), p(p_) {}
    u64 mul(u64 x) const
    {
        u64 q = static_cast<u64>((static_cast<u128>(bs) * x) >> 64);
        u64 r = b * x - q * p;
        return r >= p ? r - p : r;
    }
};

// Row accumulator with lazy reduction.
struct RowAcc {
    std::vector<u128> acc;
    std::vector<int> pending;
    u64 p;
    int chunk;
    RowAcc(int n, u64 p_) : acc(static_cast<std::size_t>(n)), pending(static_cast<std::size_t>(n)), p(p_), chunk(lazy_chunk(p_)) {}
};

constexpr double kDenseFill = 0.25;

}  // namespace

FpMatrix FpMatrix::zero(int n, u64 p)
{
    FpMatrix m;
    m.n_ = n;
    m.p_ = p;
    m.ptr_.assign(static_cast<std::size_t>(n) + 1, 0);
    return m;
}

FpMatrix FpMatrix::identity(int n, u64 p, u64 c)
{
    FpMatrix m = zero(n, p);
    c %= p;
    if (!c) return m;
    for (int i = 0; i < n; ++i) {
        m.col_.push_back(i);
        m.val_.push_back(c);
        m.ptr_[static_cast<std::size_t>(i) + 1] = i + 1;
    }
    return m;
}

FpMatrix FpMatrix::monomial(u64 p, const std::vector<int>& col, const FpVec& val)
{
    const int n = static_cast<int>(col.size());
    FpMatrix m = zero(n, p);
    for (int i = 0; i < n; ++i) {
        u64 v = val[static_cast<std::size_t>(i)] % p;
        if (v) {
            m.col_.push_back(col[static_cast<std::size_t>(i)]);
            m.val_.push_back(v);
        }
        m.ptr_[static_cast<std::size_t>(i) + 1] = static_cast<int>(m.col_.size());
    }
    return m;
}

FpMatrix FpMatrix::dense_from(int n, u64 p, FpVec a)
{
    if (a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) throw std::invalid_argument("dense matrix size mismatch");
    FpMatrix m;
    m.n_ = n;
    m.p_ = p;
    m.dense_ = true;
    m.val_ = std::move(a);
    return m;
}

bool FpMatrix::is_zero() const { return vec_is_zero(val_); }

u64 FpMatrix::at(int r, int c) const
{
    if (dense_) return val_[static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c)];
    for (int k = ptr_[static_cast<std::size_t>(r)]; k < ptr_[static_cast<std::size_t>(r) + 1]; ++k) {
        if (col_[static_cast<std::size_t>(k)] == c) return val_[static_cast<std::size_t>(k)];
    }
    return 0;
}

std::size_t FpMatrix::nonzeros() const
{
    if (!dense_) return val_.size();
    return static_cast<std::size_t>(std::count_if(val_.begin(), val_.end(), [](u64 x) { return x != 0; }));
}

FpMatrix FpMatrix::to_dense() const
{
    if (dense_) return *this;
    const auto n = static_cast<std::size_t>(n_);
    FpVec a(n * n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        for (int k = ptr_[r]; k < ptr_[r + 1]; ++k) a[r * n + static_cast<std::size_t>(col_[static_cast<std::size_t>(k)])] = val_[static_cast<std::size_t>(k)];
    }
    return dense_from(n_, p_, std::move(a));
}

FpVec FpMatrix::apply(const FpVec& v) const
{
    const auto n = static_cast<std::size_t>(n_);
    FpVec out(n, 0);
    const int chunk = lazy_chunk(p_);
    for (std::size_t r = 0; r < n; ++r) {
        u128 acc = 0;
        int cnt = 0;
        if (dense_) {
            const u64* row = val_.data() + r * n;
            for (std::size_t c = 0; c < n; ++c) {
                acc += static_cast<u128>(row[c]) * v[c];
                if (++cnt == chunk) {
                    acc %= p_;
                    cnt = 0;
                }
            }
        } else {
            for (int k = ptr_[r]; k < ptr_[r + 1]; ++k) {
                acc += static_cast<u128>(val_[static_cast<std::size_t>(k)]) * v[static_cast<std::size_t>(col_[static_cast<std::size_t>(k)])];
                if (++cnt == chunk) {
                    acc %= p_;
                    cnt = 0;
                }
            }
        }
        out[r] = static_cast<u64>(acc % p_);
    }
    return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b)
{
    if (a.n_ != b.n_ || a.p_ != b.p_) throw std::invalid_argument("matrix shape or modulus mismatch");
    const auto n = static_cast<std::size_t>(a.n_);
    const u64 p = a.p_;
    const int chunk = lazy_chunk(p);
    std::vector<u128> acc(n);
    std::vector<int> cnt(n);

    auto flush_row = [&](FpVec& out, std::size_t r) {
        for (std::size_t j = 0; j < n; ++j) out[r * n + j] = static_cast<u64>(acc[j] % p);
    };

    if (!a.dense_ && !b.dense_) {
        // Sparse product with a dense scratch row.
        FpMatrix r = FpMatrix::zero(a.n_, p);
        std::vector<int> mark(n, -1), touched;
        for (std::size_t i = 0; i < n; ++i) {
            touched.clear();
            for (int ka = a.ptr_[i]; ka < a.ptr_[i + 1]; ++ka) {
                auto k = static_cast<std::size_t>(a.col_[static_cast<std::size_t>(ka)]);
                u64 av = a.val_[static_cast<std::size_t>(ka)];
                for (int kb = b.ptr_[k]; kb < b.ptr_[k + 1]; ++kb) {
                    auto j = static_cast<std::size_t>(b.col_[static_cast<std::size_t>(kb)]);
                    if (mark[j] != static_cast<int>(i)) {
                        mark[j] = static_cast<int>(i);
                        acc[j] = 0;
                        cnt[j] = 0;
                        touched.push_back(static_cast<int>(j));
                    }
                    acc[j] += static_cast<u128>(av) * b.val_[static_cast<std::size_t>(kb)];
                    if (++cnt[j] == chunk) {
                        acc[j] %= p;
                        cnt[j] = 0;
                    }
                }
            }
            std::sort(touched.begin(), touched.end());
            for (int j : touched) {
                u64 v = static_cast<u64>(acc[static_cast<std::size_t>(j)] % p);
                if (v) {
                    r.col_.push_back(j);
                    r.val_.push_back(v);
                }
            }
            r.ptr_[i + 1] = static_cast<int>(r.col_.size());
        }
        if (static_cast<double>(r.val_.size()) > kDenseFill * static_cast<double>(n * n)) return r.to_dense();
        return r;
    }

    FpVec out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        int pending = 0;
        auto add_row = [&](u64 av, std::size_t k) {
            if (!av) return;
            if (b.dense_) {
                const u64* brow = b.val_.data() + k * n;
                for (std::size_t j = 0; j < n; ++j) acc[j] += static_cast<u128>(av) * brow[j];
                if (++pending == chunk) {
                    for (auto& x : acc) x %= p;
                    pending = 0;
                }
            } else {
                for (int kb = b.ptr_[k]; kb < b.ptr_[k + 1]; ++kb) {
                    auto j = static_cast<std::size_t>(b.col_[static_cast<std::size_t>(kb)]);
                    acc[j] += static_cast<u128>(av) * b.val_[static_cast<std::size_t>(kb)];
                }
                if (++pending == chunk) {
                    for (auto& x : acc) x %= p;
                    pending = 0;
                }
            }
        };
        if (a.dense_) {
            const u64* arow = a.val_.data() + i * n;
            for (std::size_t k = 0; k < n; ++k) add_row(arow[k], k);
        } else {
            for (int ka = a.ptr_[i]; ka < a.ptr_[i + 1]; ++ka) add_row(a.val_[static_cast<std::size_t>(ka)], static_cast<std::size_t>(a.col_[static_cast<std::size_t>(ka)]));
        }
        flush_row(out, i);
    }
    return FpMatrix::dense_from(a.n_, p, std::move(out));
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b)
{
    if (a.n_ != b.n_ || a.p_ != b.p_) throw std::invalid_argument("matrix shape or modulus mismatch");
    const u64 p = a.p_;
    const auto n = static_cast<std::size_t>(a.n_);
    if (a.dense_ || b.dense_) {
        FpMatrix r = a.to_dense();
        if (b.dense_) {
            for (std::size_t k = 0; k < r.val_.size(); ++k) r.val_[k] = add_mod(r.val_[k], b.val_[k], p);
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                for (int k = b.ptr_[i]; k < b.ptr_[i + 1]; ++k) {
                    u64& x = r.val_[i * n + static_cast<std::size_t>(b.col_[static_cast<std::size_t>(k)])];
                    x = add_mod(x, b.val_[static_cast<std::size_t>(k)], p);
                }
            }
        }
        return r;
    }
    FpMatrix r = FpMatrix::zero(a.n_, p);
    for (std::size_t i = 0; i < n; ++i) {
        int ka = a.ptr_[i], kb = b.ptr_[i];
        const int ea = a.ptr_[i + 1], eb = b.ptr_[i + 1];
        auto push = [&](int c, u64 v) {
            if (v) {
                r.col_.push_back(c);
                r.val_.push_back(v);
            }
        };
        while (ka < ea || kb < eb) {
            int ca = ka < ea ? a.col_[static_cast<std::size_t>(ka)] : a.n_;
            int cb = kb < eb ? b.col_[static_cast<std::size_t>(kb)] : b.n_;
            if (ca < cb) {
                push(ca, a.val_[static_cast<std::size_t>(ka++)]);
            } else if (cb < ca) {
                push(cb, b.val_[static_cast<std::size_t>(kb++)]);
            } else {
                push(ca, add_mod(a.val_[static_cast<std::size_t>(ka++)], b.val_[static_cast<std::size_t>(kb++)], p));
            }
        }
        r.ptr_[i + 1] = static_cast<int>(r.col_.size());
    }
    if (static_cast<double>(r.val_.size()) > kDenseFill * static_cast<double>(n * n)) return r.to_dense();
    return r;
}

FpMatrix FpMatrix::scaled(u64 c) const
{
    c %= p_;
    if (!c) return zero(n_, p_);
    FpMatrix r = *this;
    Shoup s(c, p_);
    for (auto& x : r.val_) x = s.mul(x);
    return r;
}

FpMatrix FpMatrix::inverse() const
{
    const auto n = static_cast<std::size_t>(n_);
    const u64 p = p_;
    FpVec a = to_dense().val_;
    std::vector<std::size_t> swaps(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv * n + k] == 0) ++piv;
        if (piv == n) throw SingularMatrix("matrix is singular modulo p");
        swaps[k] = piv;
        if (piv != k) std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(k * n), a.begin() + static_cast<std::ptrdiff_t>((k + 1) * n), a.begin() + static_cast<std::ptrdiff_t>(piv * n));
        u64* rk = a.data() + k * n;
        u64 inv = powmod(rk[k], p - 2, p);
        rk[k] = 1;
        Shoup si(inv, p);
        for (std::size_t j = 0; j < n; ++j) rk[j] = si.mul(rk[j]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            u64* ri = a.data() + i * n;
            u64 f = ri[k];
            if (!f) continue;
            ri[k] = 0;
            Shoup sf(f, p);
            for (std::size_t j = 0; j < n; ++j) ri[j] = sub_mod(ri[j], sf.mul(rk[j]), p);
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        if (swaps[k] == k) continue;
        for (std::size_t i = 0; i < n; ++i) std::swap(a[i * n + k], a[i * n + swaps[k]]);
    }
    return dense_from(n_, p, std::move(a));
}

bool operator==(const FpMatrix& a, const FpMatrix& b)
{
    if (a.n_ != b.n_ || a.p_ != b.p_) return false;
    return a.to_dense().val_ == b.to_dense().val_;
}

}  // namespace clr
