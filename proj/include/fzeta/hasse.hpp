#ifndef FZETA_HASSE_HPP
#define FZETA_HASSE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <fzeta/arith.hpp>
#include <fzeta/error.hpp>
#include <fzeta/fq.hpp>
#include <fzeta/poly.hpp>

namespace fzeta
{

// Coefficient types usable in hasse_multiplicity() provide is_zero(),
// operator+, operator*, mul_int(long long), characteristic() and one_like().
inline bool is_zero(const FqElem &a) noexcept
{
    return a.is_zero();
}
inline FqElem mul_int(const FqElem &a, long long n)
{
    return a * FqElem::from_int(a.field(), n);
}
inline std::uint32_t characteristic(const FqElem &a) noexcept
{
    return a.field().p();
}
inline FqElem one_like(const FqElem &a)
{
    return FqElem(a.field(), 1);
}

inline bool is_zero(const Poly &a) noexcept
{
    return a.is_zero();
}
inline Poly mul_int(const Poly &a, long long n)
{
    return a.mul_int(n);
}
inline std::uint32_t characteristic(const Poly &a) noexcept
{
    return a.field().p();
}
inline Poly one_like(const Poly &a)
{
    return Poly::one(a.field());
}

/// k-th Hasse derivative of W = sum w_i X^i evaluated at a:
/// sum_{i >= k} C(i, k) w_i a^(i-k), binomials reduced mod p.
template <class E>
E hasse_derivative_at(std::span<const E> w, const E &a, std::size_t k)
{
    const std::uint32_t p = characteristic(a);
    E acc = mul_int(a, 0);
    E apow = one_like(a);
    for (std::size_t i = k; i < w.size(); ++i) {
        const std::uint32_t b = binom_mod_p(i, k, p);
        if (b != 0 && !is_zero(w[i])) {
            acc = acc + mul_int(w[i] * apow, b);
        }
        apow = apow * a;
    }
    return acc;
}

/// Order of vanishing of W at X = a, i.e. the least k with D^(k)W(a) != 0.
/// Ordinary derivatives cannot see multiplicities >= p in characteristic p;
/// Hasse derivatives can.
template <class E>
unsigned hasse_multiplicity(std::span<const E> w, const E &a)
{
    bool nonzero = false;
    for (const auto &c : w) {
        if (!is_zero(c)) {
            nonzero = true;
            break;
        }
    }
    if (!nonzero) {
        throw domain_error("multiplicity of a root of the zero polynomial is undefined");
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!is_zero(hasse_derivative_at(w, a, k))) {
            return static_cast<unsigned>(k);
        }
    }
    // Unreachable for W != 0: the top Hasse derivative is the leading coefficient.
    throw domain_error("hasse_multiplicity: no nonvanishing derivative");
}

template <class E>
unsigned hasse_multiplicity(const std::vector<E> &w, const E &a)
{
    return hasse_multiplicity(std::span<const E>(w), a);
}

} // namespace fzeta

#endif
