#ifndef FZETA_MEASURES_HPP
#define FZETA_MEASURES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>

#include <fzeta/arith.hpp>
#include <fzeta/digit_perm.hpp>
#include <fzeta/error.hpp>
#include <fzeta/fq.hpp>
#include <fzeta/padic.hpp>

namespace fzeta
{

/// sum_i c_i z^i / i! over F_q, exponents below the window M.
///
/// The product is (z^i/i!)(z^j/j!) = C(i+j, i) z^(i+j)/(i+j)! with the
/// binomial reduced mod p.
class DividedPowerSeries
{
public:
    DividedPowerSeries(const Fq &f, std::uint64_t window) : field_(&f), M_(window) {}

    static DividedPowerSeries basis(const Fq &f, std::uint64_t i, std::uint64_t window)
    {
        DividedPowerSeries r(f, window);
        r.set(i, 1);
        return r;
    }

    const Fq &field() const noexcept
    {
        return *field_;
    }
    std::uint64_t window() const noexcept
    {
        return M_;
    }
    const std::map<std::uint64_t, Fq::elem> &terms() const noexcept
    {
        return c_;
    }
    Fq::elem coeff(std::uint64_t i) const
    {
        auto it = c_.find(i);
        return it == c_.end() ? 0 : it->second;
    }
    void set(std::uint64_t i, Fq::elem v)
    {
        if (i >= M_) {
            return;
        }
        if (v == 0) {
            c_.erase(i);
        } else {
            c_[i] = v;
        }
    }

    friend DividedPowerSeries operator+(const DividedPowerSeries &a, const DividedPowerSeries &b)
    {
        a.check(b);
        DividedPowerSeries r(*a.field_, std::min(a.M_, b.M_));
        for (auto [i, v] : a.c_) {
            r.set(i, v);
        }
        for (auto [i, v] : b.c_) {
            r.set(i, a.field_->add(r.coeff(i), v));
        }
        return r;
    }

    friend DividedPowerSeries operator*(const DividedPowerSeries &a, const DividedPowerSeries &b)
    {
        a.check(b);
        const Fq &f = *a.field_;
        DividedPowerSeries r(f, std::min(a.M_, b.M_));
        for (auto [i, u] : a.c_) {
            for (auto [j, v] : b.c_) {
                if (i + j >= r.M_) {
                    continue;
                }
                const std::uint32_t c = binom_mod_p(i + j, i, f.p());
                if (c != 0) {
                    r.set(i + j, f.add(r.coeff(i + j), f.mul(f.from_int(c), f.mul(u, v))));
                }
            }
        }
        return r;
    }

    friend bool operator==(const DividedPowerSeries &a, const DividedPowerSeries &b) noexcept
    {
        return a.field_ == b.field_ && a.M_ == b.M_ && a.c_ == b.c_;
    }

    std::string to_string() const
    {
        std::string s;
        for (auto [i, v] : c_) {
            if (!s.empty()) {
                s += '+';
            }
            if (v != 1) {
                s += field_->to_string(v) + "*";
            }
            s += "z^" + std::to_string(i) + "/" + std::to_string(i) + "!";
        }
        return (s.empty() ? "0" : s) + " (mod deg " + std::to_string(M_) + ")";
    }

private:
    void check(const DividedPowerSeries &o) const
    {
        if (field_ != o.field_) {
            throw domain_error("mixed fields in divided power series");
        }
    }

    const Fq *field_;
    std::uint64_t M_;
    std::map<std::uint64_t, Fq::elem> c_;
};

inline DividedPowerSeries dps_mul(const DividedPowerSeries &a, const DividedPowerSeries &b)
{
    return a * b;
}

/// Smallest window p^k that sigma_* maps onto itself.
inline std::uint64_t stable_window(const DigitPerm &sigma, std::uint32_t p, std::uint64_t at_least)
{
    std::uint64_t M = 1;
    unsigned k = 0;
    while (M < at_least || k < sigma.support_bound()) {
        M *= p;
        ++k;
    }
    return M;
}

/// z^i/i! -> z^(sigma_* i)/(sigma_* i)!, with sigma permuting base-p digit positions.
/// The window must be p^k with sigma moving only positions below k.
inline DividedPowerSeries dps_automorphism(const DigitPerm &sigma, const DividedPowerSeries &f)
{
    const std::uint32_t p = f.field().p();
    const std::uint64_t M = f.window();
    std::uint64_t pk = 1;
    unsigned k = 0;
    while (pk < M) {
        pk *= p;
        ++k;
    }
    if (pk != M || sigma.support_bound() > k) {
        throw domain_error("window " + std::to_string(M) + " is not stable under the digit permutation; need M = " +
                           std::to_string(stable_window(sigma, p, M)));
    }
    DividedPowerSeries r(f.field(), M);
    for (auto [i, v] : f.terms()) {
        r.set(static_cast<std::uint64_t>(rho_star(sigma, static_cast<long long>(i), p)), v);
    }
    return r;
}

/// C(y, k) == C(sigma y, sigma k) mod p.
inline bool binom_invariant(const DigitPerm &sigma, const PAdic &y, std::uint64_t k)
{
    const std::uint32_t p = y.base();
    const auto sk = static_cast<std::uint64_t>(rho_star(sigma, static_cast<long long>(k), p));
    return binom_padic(y, k) == binom_padic(rho_star(sigma, y), sk);
}

/// i + j carries in base p iff sigma i + sigma j does.
inline bool carry_invariant(const DigitPerm &sigma, std::uint64_t i, std::uint64_t j, std::uint32_t p)
{
    const auto si = static_cast<std::uint64_t>(rho_star(sigma, static_cast<long long>(i), p));
    const auto sj = static_cast<std::uint64_t>(rho_star(sigma, static_cast<long long>(j), p));
    return carry_free(i, j, p) == carry_free(si, sj, p);
}

/// Counts of randomized checks that passed, per property.
struct MeasureSelfTest
{
    std::uint32_t p = 0;
    std::uint64_t window = 0, seed = 0;
    unsigned trials = 0;
    unsigned binom = 0, carry = 0, additive = 0, multiplicative = 0, composition = 0;
    bool ok() const noexcept
    {
        return binom == trials && carry == trials && additive == trials && multiplicative == trials &&
               composition == trials;
    }
};

/// Random sparse element with a few terms below the window.
template <class Rng>
DividedPowerSeries random_dps(const Fq &f, std::uint64_t window, Rng &rng, unsigned terms = 4)
{
    DividedPowerSeries r(f, window);
    for (unsigned t = 0; t < terms; ++t) {
        r.set(rng() % window, static_cast<Fq::elem>(1 + rng() % (f.q() - 1)));
    }
    return r;
}

/// Randomized checks over F_p with window M = p^k.
inline MeasureSelfTest measures_selftest(std::uint32_t p, unsigned trials, std::uint64_t window, std::uint64_t seed)
{
    if (!is_prime(p)) {
        throw domain_error("measures self-test runs over a prime field");
    }
    unsigned k = 0;
    std::uint64_t pk = 1;
    while (pk < window) {
        pk *= p;
        ++k;
    }
    if (pk != window || k == 0) {
        throw domain_error("window must be a positive power of p, e.g. " + std::to_string(pk));
    }
    const Fq &f = Fq::get(p);
    std::mt19937_64 rng(seed);
    MeasureSelfTest r;
    r.p = p;
    r.window = window;
    r.seed = seed;
    r.trials = trials;
    for (unsigned t = 0; t < trials; ++t) {
        const DigitPerm sigma = random_digit_perm(rng, k);
        const DigitPerm tau = random_digit_perm(rng, k);
        std::vector<std::uint32_t> yd(k + 2);
        for (auto &d : yd) {
            d = static_cast<std::uint32_t>(rng() % p);
        }
        const PAdic y(p, yd, static_cast<std::uint32_t>(rng() % 2 == 0 ? 0 : p - 1));
        r.binom += binom_invariant(sigma, y, rng() % window);
        r.carry += carry_invariant(sigma, rng() % window, rng() % window, p);
        const auto a = random_dps(f, window, rng), b = random_dps(f, window, rng);
        r.additive += dps_automorphism(sigma, a + b) == dps_automorphism(sigma, a) + dps_automorphism(sigma, b);
        r.multiplicative += dps_automorphism(sigma, a * b) == dps_automorphism(sigma, a) * dps_automorphism(sigma, b);
        r.composition += dps_automorphism(sigma.compose(tau), a) == dps_automorphism(sigma, dps_automorphism(tau, a));
    }
    return r;
}

} // namespace fzeta

#endif
