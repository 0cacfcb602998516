#ifndef FZETA_CARLITZ_HPP
#define FZETA_CARLITZ_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <fzeta/arith.hpp>
#include <fzeta/error.hpp>
#include <fzeta/fq.hpp>
#include <fzeta/poly.hpp>
#include <fzeta/ratfun.hpp>

namespace fzeta
{

/// [i] = T^(q^i) - T.
inline Poly bracket(const Fq &f, unsigned i)
{
    if (i == 0) {
        throw domain_error("[0] = 0 is not used; brackets start at i = 1");
    }
    return Poly::monomial(f, 1, ipow(f.q(), i)) - Poly::T(f);
}

/// D_i = [i][i-1]^q ... [1]^(q^(i-1)), D_0 = 1. Uses [k]^(q^m) = T^(q^(k+m)) - T^(q^m).
inline Poly carlitz_D(const Fq &f, unsigned i)
{
    Poly r = Poly::one(f);
    for (unsigned k = 1; k <= i; ++k) {
        const unsigned m = i - k;
        r *= Poly::monomial(f, 1, ipow(f.q(), k + m)) - Poly::monomial(f, 1, ipow(f.q(), m));
    }
    return r;
}

/// L_i = [i][i-1]...[1], L_0 = 1.
inline Poly carlitz_L(const Fq &f, unsigned i)
{
    Poly r = Poly::one(f);
    for (unsigned k = 1; k <= i; ++k) {
        r *= bracket(f, k);
    }
    return r;
}

/// Carlitz factorial Pi_j = prod_e D_e^(c_e) over the base-q digits c_e of j.
inline Poly carlitz_factorial(const Fq &f, std::uint64_t j)
{
    Poly r = Poly::one(f);
    const auto d = digits_of(j, f.q());
    for (std::size_t e = 0; e < d.size(); ++e) {
        if (d[e] != 0) {
            r *= carlitz_D(f, static_cast<unsigned>(e)).pow(d[e]);
        }
    }
    return r;
}

/// v_P(Pi_j) for a prime P of degree d: sum_{e >= 1} floor(j / q^(ed)).
inline std::uint64_t factorial_valuation(std::uint64_t j, unsigned d, std::uint32_t q)
{
    if (d == 0) {
        throw domain_error("prime degree must be positive");
    }
    std::uint64_t v = 0;
    const std::uint64_t step = ipow(q, d);
    for (std::uint64_t qe = step; qe <= j; qe *= step) {
        v += j / qe;
        if (qe > j / step) {
            break;
        }
    }
    return v;
}

/// Direct count of P in Pi_j by repeated division.
inline std::uint64_t factorial_valuation_direct(const Poly &P, std::uint64_t j)
{
    return valuation(carlitz_factorial(P.field(), j), P);
}

/// Coefficients of e_C(z) = sum e_i z^(q^i) and log_C(z) = sum l_i z^(q^i), i <= n.
struct CarlitzExpLog
{
    std::vector<RatFun> exp; // e_i = 1/D_i
    std::vector<RatFun> log; // l_i by reversion
};

/// l_n = -sum_{i=1..n} e_i l_{n-i}^(q^i), from e_C(log_C(z)) = z.
inline CarlitzExpLog carlitz_exp_log(const Fq &f, unsigned n)
{
    CarlitzExpLog r;
    for (unsigned i = 0; i <= n; ++i) {
        r.exp.emplace_back(Poly::one(f), carlitz_D(f, i));
    }
    r.log.emplace_back(Poly::one(f));
    for (unsigned k = 1; k <= n; ++k) {
        RatFun acc(f);
        for (unsigned i = 1; i <= k; ++i) {
            acc = acc + r.exp[i] * r.log[k - i].frobenius_q(i);
        }
        r.log.push_back(RatFun(Poly(f)) - acc);
    }
    return r;
}

/// Coefficient of z^(q^k) in log_C(e_C(z)) for k = 0..n; the identity series gives (1, 0, ..., 0).
inline std::vector<RatFun> log_after_exp(const CarlitzExpLog &s)
{
    const Fq &f = s.exp.front().field();
    std::vector<RatFun> out;
    for (std::size_t k = 0; k < s.exp.size(); ++k) {
        RatFun acc(f);
        for (std::size_t i = 0; i <= k; ++i) {
            acc = acc + s.log[i] * s.exp[k - i].frobenius_q(static_cast<unsigned>(i));
        }
        out.push_back(acc);
    }
    return out;
}

/// Bernoulli-Carlitz number BC_j = Pi_j [z^j](z / e_C(z)) with its denominator.
struct BCNumber
{
    std::uint64_t j = 0;
    RatFun value;
    Poly denominator; // monic generator of the denominator ideal
};

/// z / e_C(z) = sum_n beta_n z^n, n <= n_max, from beta_0 = 1 and
/// beta_n = -sum_{i >= 1, q^i - 1 <= n} beta_{n - (q^i - 1)} / D_i.
inline std::vector<RatFun> inverse_exp_series(const Fq &f, std::uint64_t n_max)
{
    std::vector<RatFun> invD;
    for (unsigned i = 1; ipow(f.q(), i) - 1 <= n_max; ++i) {
        invD.emplace_back(Poly::one(f), carlitz_D(f, i));
    }
    std::vector<RatFun> beta;
    beta.emplace_back(Poly::one(f));
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        RatFun acc(f);
        for (unsigned i = 1; i <= invD.size(); ++i) {
            const std::uint64_t step = ipow(f.q(), i) - 1;
            if (step > n) {
                break;
            }
            const RatFun &b = beta[n - step];
            if (!b.is_zero()) {
                acc = acc + b * invD[i - 1];
            }
        }
        beta.push_back(RatFun(Poly(f)) - acc);
    }
    return beta;
}

inline std::vector<BCNumber> bc_numbers(const Fq &f, std::uint64_t j_max)
{
    const auto beta = inverse_exp_series(f, j_max);
    std::vector<BCNumber> out;
    for (std::uint64_t j = 0; j <= j_max; ++j) {
        RatFun v = RatFun(carlitz_factorial(f, j)) * beta[j];
        Poly den = v.den();
        out.push_back({j, std::move(v), std::move(den)});
    }
    return out;
}

inline BCNumber bc_number(const Fq &f, std::uint64_t j)
{
    return bc_numbers(f, j).back();
}

/// Product of all monic irreducibles of degree h.
inline Poly product_of_primes(const Fq &f, unsigned h)
{
    Poly r = Poly::one(f);
    for (const Poly &P : monic_irreducibles(f, h)) {
        r *= P;
    }
    return r;
}

/// Predicted generator of the denominator ideal of BC_j (j >= 1).
inline Poly vsc_predict(std::uint64_t j, std::uint32_t q)
{
    const Fq &f = Fq::get(q);
    const auto pp = prime_power(q);
    const std::uint32_t p = pp->first;
    const std::uint32_t n0 = pp->second;
    if (j == 0) {
        throw domain_error("denominator prediction starts at j = 1");
    }
    const std::uint64_t lp = digit_sum(j, p);
    if (q > 2) {
        if (j % (q - 1) != 0 || lp % ((p - 1) * n0) != 0) {
            return Poly::one(f);
        }
        const unsigned h = static_cast<unsigned>(lp / ((p - 1) * n0));
        if (j % (ipow(q, h) - 1) != 0) {
            return Poly::one(f);
        }
        return product_of_primes(f, h);
    }
    const unsigned h = static_cast<unsigned>(lp);
    const bool consistent = j % (ipow(2, h) - 1) == 0;
    if (consistent && h != 2) {
        return product_of_primes(f, h);
    }
    if (consistent) {
        const Poly t2t1 = Poly::parse(f, "T^2+T+1");
        return j % 2 == 0 ? t2t1 : Poly::parse(f, "T^2+T") * t2t1;
    }
    // j = 2^a + 1 with a >= 1.
    if (h == 2 && (j & 1) != 0) {
        return Poly::parse(f, "T^2+T");
    }
    return Poly::one(f);
}

/// One row of the denominator comparison.
struct VscRow
{
    std::uint64_t j = 0;
    Poly predicted;
    Poly computed;
    bool match = false;
};

/// Constancy of v_P(denominator) on one digit orbit, for a prime P of degree h.
struct VscOrbitCheck
{
    unsigned h = 0;
    std::string prime;
    std::vector<std::uint64_t> members;
    std::vector<unsigned> valuations;
    bool constant = false;
};

struct VscTable
{
    std::uint32_t q = 0;
    std::vector<VscRow> rows;
    std::vector<VscOrbitCheck> orbits;
    bool all_match() const noexcept
    {
        for (const auto &r : rows) {
            if (!r.match) {
                return false;
            }
        }
        for (const auto &o : orbits) {
            if (!o.constant) {
                return false;
            }
        }
        return true;
    }
};

/// Compares the computed denominators for 1 <= j <= j_max, (q-1) | j, with the
/// prediction, then checks that v_P of the computed denominator is constant on
/// each digit orbit: base q^h digits for deg P = h, and for q = 2, h = 1,
/// base-4 digits with position 0 held fixed.
inline VscTable vsc_verify(std::uint64_t j_max, std::uint32_t q, unsigned max_prime_degree = 3)
{
    const Fq &f = Fq::get(q);
    VscTable t;
    t.q = q;
    const auto bcs = bc_numbers(f, j_max);
    std::vector<std::uint64_t> eligible;
    for (std::uint64_t j = 1; j <= j_max; ++j) {
        if (j % (q - 1) != 0) {
            if (!bcs[j].value.is_zero()) {
                t.rows.push_back({j, Poly::one(f), bcs[j].denominator, false});
            }
            continue;
        }
        eligible.push_back(j);
        Poly pred = vsc_predict(j, q);
        const bool ok = pred == bcs[j].denominator;
        t.rows.push_back({j, std::move(pred), bcs[j].denominator, ok});
    }
    for (unsigned h = 1; h <= max_prime_degree && ipow(q, h) <= 4096; ++h) {
        const bool fix_zero = q == 2 && h == 1;
        const std::uint64_t base = fix_zero ? 4 : ipow(q, h);
        for (const Poly &P : monic_irreducibles(f, h)) {
            std::map<std::vector<std::uint32_t>, VscOrbitCheck> groups;
            for (auto j : eligible) {
                auto d = digits_of(j, base);
                std::vector<std::uint32_t> key;
                std::size_t from = 0;
                if (fix_zero) {
                    key.push_back(d.empty() ? 0 : d[0]);
                    from = 1;
                }
                std::vector<std::uint32_t> rest;
                for (std::size_t k = from; k < d.size(); ++k) {
                    if (d[k] != 0) {
                        rest.push_back(d[k]);
                    }
                }
                std::sort(rest.begin(), rest.end());
                key.push_back(static_cast<std::uint32_t>(rest.size()));
                key.insert(key.end(), rest.begin(), rest.end());
                auto &g = groups[key];
                g.h = h;
                g.prime = P.to_string();
                g.members.push_back(j);
                g.valuations.push_back(valuation(bcs[j].denominator, P));
            }
            for (auto &[key, g] : groups) {
                if (g.members.size() < 2) {
                    continue;
                }
                g.constant = std::all_of(g.valuations.begin(), g.valuations.end(),
                                         [&](unsigned v) { return v == g.valuations.front(); });
                t.orbits.push_back(std::move(g));
            }
        }
    }
    return t;
}

} // namespace fzeta

#endif
