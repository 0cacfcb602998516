#ifndef FZETA_BIGRAT_HPP
#define FZETA_BIGRAT_HPP

#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include <fzeta/error.hpp>

namespace fzeta
{

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// p-adic valuation of a nonzero integer.
inline long valuation_p(BigInt n, std::uint64_t p)
{
    if (n == 0) {
        throw domain_error("p-adic valuation of zero");
    }
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// p-adic valuation of a nonzero rational; +infinity (LONG_MAX) for zero.
inline long valuation_p(const BigRat &r, std::uint64_t p)
{
    if (r == 0) {
        return std::numeric_limits<long>::max();
    }
    return valuation_p(BigInt(numerator(r)), p) - valuation_p(BigInt(denominator(r)), p);
}

inline BigInt factorial(unsigned n)
{
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

inline BigInt binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace fzeta

#endif
