#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace clr {

using Rational = mpq_class;

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of F_p for a runtime 64-bit prime p.  Values carry their modulus so
// that generic code can build constants from existing coefficients.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), p(modulus) {}

    static Fp from_int(std::int64_t x, std::uint64_t p);
    static Fp from_rational(const Rational& q, std::uint64_t p);

    bool is_zero() const { return v == 0; }
    Fp inv() const;
    Fp pow(std::int64_t e) const;

    friend Fp operator+(Fp a, Fp b) {
        std::uint64_t s = a.v + b.v;
        if (s >= a.p) s -= a.p;
        return {s, a.p, 0};
    }
    friend Fp operator-(Fp a, Fp b) { return {a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p, 0}; }
    friend Fp operator-(Fp a) { return {a.v ? a.p - a.v : 0, a.p, 0}; }
    friend Fp operator*(Fp a, Fp b) {
        return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v) * b.v % a.p), a.p, 0};
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }

private:
    Fp(std::uint64_t value, std::uint64_t modulus, int) : v(value), p(modulus) {}
};

std::string to_string(const Fp& x);

inline bool coef_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coef_is_zero(const Fp& c) { return c.is_zero(); }
inline std::string coef_string(const Rational& c) { return c.get_str(); }
inline std::string coef_string(const Fp& c) { return to_string(c); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
bool is_prime_u64(std::uint64_t n);

// Random prime p with 2^(bits-1) <= p < 2^bits and L | p-1.
std::uint64_t random_prime_with_root(unsigned bits, unsigned L, std::mt19937_64& rng);
// A primitive L-th root of unity in F_p (L prime or L | p-1 with all prime factors checked).
std::uint64_t primitive_root_of_unity(std::uint64_t p, unsigned L, std::mt19937_64& rng);
// Uniform nonzero residue.
std::uint64_t random_nonzero(std::uint64_t p, std::mt19937_64& rng);

}  // namespace clr
