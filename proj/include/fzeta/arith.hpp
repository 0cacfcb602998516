#ifndef FZETA_ARITH_HPP
#define FZETA_ARITH_HPP

// Small-integer helpers shared by every module: primality, prime powers,
// base-b digits, digit sums and binomial coefficients reduced mod p.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <fzeta/error.hpp>

namespace fzeta
{

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

// Returns (p, n0) with q = p^n0, or nullopt if q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q)
{
    if (q < 2) {
        return std::nullopt;
    }
    std::uint64_t p = 2;
    while (q % p != 0) {
        ++p;
    }
    std::uint32_t n0 = 0;
    while (q % p == 0) {
        q /= p;
        ++n0;
    }
    if (q != 1) {
        return std::nullopt;
    }
    return std::make_pair(static_cast<std::uint32_t>(p), n0);
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

// Base-b digits of n, least significant first (empty for n = 0).
inline std::vector<std::uint32_t> digits_of(std::uint64_t n, std::uint64_t b)
{
    std::vector<std::uint32_t> out;
    while (n != 0) {
        out.push_back(static_cast<std::uint32_t>(n % b));
        n /= b;
    }
    return out;
}

inline std::uint64_t digit_sum(std::uint64_t n, std::uint64_t b)
{
    std::uint64_t s = 0;
    while (n != 0) {
        s += n % b;
        n /= b;
    }
    return s;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e-- != 0) {
        r *= b;
    }
    return r;
}

// Exact binomial for small arguments (n < 64 keeps everything in range for the
// Lucas digits we feed it).
inline std::uint64_t small_binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// C(n, k) mod p by Lucas' theorem.
inline std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p)
{
    std::uint64_t r = 1;
    while (k != 0 || n != 0) {
        const std::uint64_t nd = n % p;
        const std::uint64_t kd = k % p;
        if (kd > nd) {
            return 0;
        }
        r = r * (small_binomial(nd, kd) % p) % p;
        n /= p;
        k /= p;
    }
    return static_cast<std::uint32_t>(r);
}

// True iff adding a and b in base b produces no carry.
inline bool carry_free(std::uint64_t a, std::uint64_t c, std::uint64_t b)
{
    while (a != 0 && c != 0) {
        if (a % b + c % b >= b) {
            return false;
        }
        a /= b;
        c /= b;
    }
    return true;
}

} // namespace fzeta

#endif
