#include "clr/scalar.hpp"

#include <vector>

namespace clr {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    static const std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto q : small) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : small) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Fp Fp::from_int(std::int64_t x, std::uint64_t p)
{
    std::int64_t r = x % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
}

Fp Fp::from_rational(const Rational& q, std::uint64_t p)
{
    mpz_class m(std::to_string(p));
    mpz_class a = q.get_num() % m;
    if (a < 0) a += m;
    mpz_class b = q.get_den() % m;
    if (b == 0) throw ArithmeticError("denominator vanishes mod p");
    Fp num(std::stoull(a.get_str()), p);
    Fp den(std::stoull(b.get_str()), p);
    return num / den;
}

Fp Fp::inv() const
{
    if (v == 0) throw ArithmeticError("inverse of zero in F_p");
    return Fp(powmod(v, p - 2, p), p);
}

Fp Fp::pow(std::int64_t e) const
{
    if (e < 0) return inv().pow(-e);
    return Fp(powmod(v, static_cast<std::uint64_t>(e), p), p);
}

std::string to_string(const Fp& x) { return std::to_string(x.v); }

std::uint64_t random_prime_with_root(unsigned bits, unsigned L, std::mt19937_64& rng)
{
    if (bits < 8 || bits > 62) throw std::invalid_argument("prime bits must lie in [8, 62]");
    const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
    const std::uint64_t hi = (std::uint64_t{1} << bits) - 1;
    std::uniform_int_distribution<std::uint64_t> dist(lo / L, hi / L - 1);
    for (;;) {
        std::uint64_t p = dist(rng) * L + 1;
        if (p >= lo && p <= hi && is_prime_u64(p)) return p;
    }
}

std::uint64_t primitive_root_of_unity(std::uint64_t p, unsigned L, std::mt19937_64& rng)
{
    if ((p - 1) % L != 0) throw std::invalid_argument("L does not divide p-1");
    std::vector<unsigned> primes;
    unsigned t = L;
    for (unsigned q = 2; q * q <= t; ++q) {
        if (t % q == 0) {
            primes.push_back(q);
            while (t % q == 0) t /= q;
        }
    }
    if (t > 1) primes.push_back(t);
    std::uniform_int_distribution<std::uint64_t> dist(2, p - 1);
    for (;;) {
        std::uint64_t z = powmod(dist(rng), (p - 1) / L, p);
        bool primitive = z != 1;
        for (unsigned q : primes) {
            if (powmod(z, L / q, p) == 1) primitive = false;
        }
        if (primitive) return z;
    }
}

std::uint64_t random_nonzero(std::uint64_t p, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
    return dist(rng);
}

}  // namespace clr
