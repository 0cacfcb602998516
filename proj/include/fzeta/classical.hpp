#ifndef FZETA_CLASSICAL_HPP
#define FZETA_CLASSICAL_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <fzeta/arith.hpp>
#include <fzeta/bigrat.hpp>
#include <fzeta/error.hpp>

namespace fzeta
{

/// B_0..B_nmax from sum_{k=0}^{n} C(n+1, k) B_k = 0 (so B_1 = -1/2).
class BernoulliCache
{
public:
    static constexpr unsigned default_nmax = 200;

    explicit BernoulliCache(unsigned nmax = default_nmax)
    {
        b_.reserve(nmax + 1);
        b_.emplace_back(1);
        for (unsigned n = 1; n <= nmax; ++n) {
            if (n > 1 && n % 2 == 1) {
                b_.emplace_back(0);
                continue;
            }
            BigRat s = 0;
            for (unsigned k = 0; k < n; ++k) {
                if (b_[k] != 0) {
                    s += BigRat(binomial(n + 1, k)) * b_[k];
                }
            }
            b_.push_back(-s / BigRat(n + 1));
        }
    }

    unsigned nmax() const noexcept
    {
        return static_cast<unsigned>(b_.size() - 1);
    }
    const BigRat &operator()(unsigned n) const
    {
        if (n >= b_.size()) {
            throw domain_error("B_" + std::to_string(n) + " is beyond the cache (nmax = " + std::to_string(nmax()) +
                               ")");
        }
        return b_[n];
    }

private:
    std::vector<BigRat> b_;
};

/// prod of the primes p with (p - 1) | n, for even n >= 2.
inline BigInt vsc_classical(unsigned n)
{
    if (n < 2 || n % 2 != 0) {
        throw domain_error("von Staudt-Clausen product is taken for even n >= 2");
    }
    BigInt r = 1;
    for (unsigned p = 2; p <= n + 1; ++p) {
        if (n % (p - 1) == 0 && is_prime(p)) {
            r *= p;
        }
    }
    return r;
}

/// v_p(B_n) >= v_p(n) for even n with (p - 1) not dividing n.
inline bool adams_check(const BernoulliCache &B, unsigned n, unsigned p)
{
    if (n == 0 || n % 2 != 0 || n % (p - 1) == 0 || !is_prime(p)) {
        throw domain_error("Adams' congruence needs n even and positive, p prime, (p-1) not dividing n");
    }
    return valuation_p(B(n), p) >= valuation_p(BigInt(n), p);
}

/// (1 - p^(n-1)) B_n / n.
inline BigRat kummer_term(const BernoulliCache &B, unsigned n, unsigned p)
{
    BigInt pn = 1;
    for (unsigned k = 1; k < n; ++k) {
        pn *= p;
    }
    return BigRat(BigInt(1) - pn) * B(n) / BigRat(n);
}

/// (1 - p^(i-1)) B_i / i == (1 - p^(j-1)) B_j / j mod p^b, both sides p-integral.
inline bool kummer_check(const BernoulliCache &B, unsigned i, unsigned j, unsigned p, unsigned b)
{
    if (i == 0 || j == 0 || i % 2 != 0 || j % 2 != 0 || i % (p - 1) == 0 || b == 0 || !is_prime(p)) {
        throw domain_error("Kummer's congruence needs i, j even and positive, (p-1) not dividing i, b >= 1");
    }
    const std::uint64_t mod = ipow(p, b - 1) * (p - 1);
    if ((i > j ? i - j : j - i) % mod != 0) {
        throw domain_error("Kummer's congruence needs i == j mod p^(b-1)(p-1)");
    }
    const BigRat a = kummer_term(B, i, p);
    const BigRat c = kummer_term(B, j, p);
    if (valuation_p(a, p) < 0 || valuation_p(c, p) < 0) {
        return false;
    }
    return valuation_p(a - c, p) >= static_cast<long>(b);
}

/// Window verification for the stability of v_p(B_m) on a congruence class of n.
struct StabilityReport
{
    unsigned n = 0, p = 0;
    long t0 = 0, t = 0;
    std::uint64_t modulus = 0;        // (p - 1) p^t
    std::vector<unsigned> window;     // m <= nmax, m == n mod modulus, m != n
    std::vector<unsigned> failures;   // m with v_p(B_m) != v_p(B_n)
    unsigned digit_orbit_hits = 0;    // m whose base-p digits are a permutation of n's
    bool ok() const noexcept
    {
        return failures.empty();
    }
};

inline bool same_base_p_digits(std::uint64_t a, std::uint64_t b, unsigned p)
{
    auto da = digits_of(a, p), db = digits_of(b, p);
    std::vector<std::uint32_t> nza, nzb;
    for (auto d : da) {
        if (d != 0) {
            nza.push_back(d);
        }
    }
    for (auto d : db) {
        if (d != 0) {
            nzb.push_back(d);
        }
    }
    std::sort(nza.begin(), nza.end());
    std::sort(nzb.begin(), nzb.end());
    return nza == nzb;
}

/// t0 = max(v_p(n), v_p(B_n / n)), t = t0 + 1; then v_p(B_m) = v_p(B_n) for every
/// m == n mod (p - 1) p^t within the cache.
inline StabilityReport stability_check(const BernoulliCache &B, unsigned n, unsigned p)
{
    if (p == 2 || !is_prime(p) || n == 0 || n % 2 != 0) {
        throw domain_error("stability check needs an odd prime p and even n > 0");
    }
    StabilityReport r;
    r.n = n;
    r.p = p;
    r.t0 = std::max(valuation_p(BigInt(n), p), valuation_p(B(n) / BigRat(n), p));
    r.t = r.t0 + 1;
    r.modulus = (p - 1) * ipow(p, static_cast<unsigned>(std::max(0L, r.t)));
    const long vn = valuation_p(B(n), p);
    for (std::uint64_t m = n % r.modulus; m <= B.nmax(); m += r.modulus) {
        if (m == 0 || m == n) {
            continue;
        }
        r.window.push_back(static_cast<unsigned>(m));
        if (valuation_p(B(static_cast<unsigned>(m)), p) != vn) {
            r.failures.push_back(static_cast<unsigned>(m));
        }
        if (same_base_p_digits(n, m, p)) {
            ++r.digit_orbit_hits;
        }
    }
    return r;
}

/// v_p(B_n) versus v_p(B_m): true when they differ.
inline bool valuations_differ(const BernoulliCache &B, unsigned n, unsigned m, unsigned p)
{
    return valuation_p(B(n), p) != valuation_p(B(m), p);
}

/// Euler's ratio zeta*(1-n) / zeta*(n) = Q / pi^n with zeta*(s) = (1 - 2^(1-s)) zeta(s),
/// zeta(1-n) = -B_n / n and zeta(n) = (-1)^(n/2+1) B_n 2^n pi^n / (2 n!) for even n.
/// Returns Q (0 for odd n >= 3, where B_n = 0).
inline BigRat euler_ratio_coefficient(const BernoulliCache &B, unsigned n)
{
    if (n < 2) {
        throw domain_error("Euler's ratio is checked for n >= 2");
    }
    const BigRat bn = B(n);
    const BigRat two_n = BigRat(BigInt(1) << n);
    const BigRat lhs_num = (BigRat(1) - two_n) * (-bn / BigRat(n)); // zeta*(1-n)
    if (n % 2 != 0) {
        return lhs_num; // B_n = 0 here
    }
    const int sign = ((n / 2 + 1) % 2 == 0) ? 1 : -1;
    const BigRat rn = BigRat(sign) * bn * two_n / (BigRat(2) * BigRat(factorial(n))); // zeta(n) / pi^n
    const BigRat star = BigRat(1) - BigRat(1) / BigRat(BigInt(1) << (n - 1));            // 1 - 2^(1-n)
    return lhs_num / (star * rn);
}

/// (-1)^(n/2+1) (2^n - 1) (n-1)! / (2^(n-1) - 1).
inline BigRat euler_ratio_closed_form(unsigned n)
{
    if (n < 2 || n % 2 != 0) {
        throw domain_error("closed form is stated for even n >= 2");
    }
    const int sign = ((n / 2 + 1) % 2 == 0) ? 1 : -1;
    const BigInt num = ((BigInt(1) << n) - 1) * factorial(n - 1);
    const BigInt den = (BigInt(1) << (n - 1)) - 1;
    return BigRat(sign) * BigRat(num, den);
}

inline bool euler_ratio_check(const BernoulliCache &B, unsigned n)
{
    const BigRat q = euler_ratio_coefficient(B, n);
    if (n % 2 != 0) {
        return q == 0;
    }
    return q == euler_ratio_closed_form(n);
}

} // namespace fzeta

#endif
