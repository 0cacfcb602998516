#ifndef FZETA_ZETA_HPP
#define FZETA_ZETA_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <fzeta/arith.hpp>
#include <fzeta/error.hpp>
#include <fzeta/fq.hpp>
#include <fzeta/hasse.hpp>
#include <fzeta/laurent.hpp>
#include <fzeta/padic.hpp>
#include <fzeta/poly.hpp>
#include <fzeta/rings.hpp>

namespace fzeta
{

/// S_e(j) = sum of f^j over the positive elements f of degree e, by enumeration.
template <class Ring>
typename Ring::Elem power_sum(const Ring &ring, unsigned e, std::uint64_t j)
{
    typename Ring::Elem acc = ring.zero();
    ring.for_each_monic(e, [&](const typename Ring::Elem &f) { acc += ring.pow(f, j); });
    return acc;
}

/// Memoized S_e(j) over F_q[T] from the exact recurrence
///   S_e(j) = -sum_{0 <= m < j, (q-1) | (j-m)} C(j, m) T^m S_{e-1}(m),   S_0(j) = 1,
/// obtained by writing a monic of degree e as T g + c and summing over c in F_q.
/// Only m digit-dominated by j in base p contribute (Lucas).
class PowerSumCache
{
public:
    explicit PowerSumCache(const Fq &f) : field_(&f) {}

    const Fq &field() const noexcept
    {
        return *field_;
    }

    const Poly &get(unsigned e, std::uint64_t j)
    {
        if (e == 0) {
            static thread_local std::map<const Fq *, Poly> ones;
            auto it = ones.find(field_);
            if (it == ones.end()) {
                it = ones.emplace(field_, Poly::one(*field_)).first;
            }
            return it->second;
        }
        const auto key = std::make_pair(e, j);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        const Fq &f = *field_;
        const std::uint32_t p = f.p();
        const std::uint64_t qm1 = f.q() - 1;
        const auto jd = digits_of(j, p);
        std::vector<Fq::elem> acc;
        // Walk the m with base-p digits m_k <= j_k.
        std::vector<std::uint32_t> md(jd.size(), 0);
        std::vector<std::uint64_t> pw(jd.size(), 1);
        for (std::size_t k = 1; k < jd.size(); ++k) {
            pw[k] = pw[k - 1] * p;
        }
        std::uint64_t m = 0;
        for (;;) {
            if (m < j && (j - m) % qm1 == 0) {
                std::uint64_t c = 1;
                for (std::size_t k = 0; k < jd.size(); ++k) {
                    c = c * small_binomial(jd[k], md[k]) % p;
                }
                const Poly &prev = get(e - 1, m);
                if (c != 0 && !prev.is_zero()) {
                    const Fq::elem s = f.neg(f.from_int(static_cast<long long>(c)));
                    const auto &pc = prev.coeffs();
                    if (acc.size() < m + pc.size()) {
                        acc.resize(m + pc.size(), 0);
                    }
                    for (std::size_t i = 0; i < pc.size(); ++i) {
                        if (pc[i] != 0) {
                            acc[m + i] = f.add(acc[m + i], f.mul(s, pc[i]));
                        }
                    }
                }
            }
            // Next digit-dominated m (odometer).
            std::size_t k = 0;
            while (k < jd.size() && md[k] == jd[k]) {
                m -= static_cast<std::uint64_t>(md[k]) * pw[k];
                md[k] = 0;
                ++k;
            }
            if (k == jd.size()) {
                break;
            }
            ++md[k];
            m += pw[k];
        }
        return memo_.emplace(key, Poly(f, std::move(acc))).first->second;
    }

    std::size_t size() const noexcept
    {
        return memo_.size();
    }

private:
    const Fq *field_;
    std::map<std::pair<unsigned, std::uint64_t>, Poly> memo_;
};

/// sum over monic f of degree e of <f>^t, known to O(pi^N).
inline Laurent power_sum_tilde(const PolyRing &ring, unsigned e, const PAdic &t, long N)
{
    const Fq &f = *ring.field;
    Laurent acc = Laurent::zero(f, "pi", N);
    ring.for_each_monic(e, [&](const Poly &g) {
        acc += one_unit_pow(one_unit_of(g, N).second, t, N);
    });
    return acc;
}

/// An admissible decomposition i = i_0 + ... + i_e: carry-free in base p,
/// i_0..i_{e-1} positive multiples of q-1.
struct Admissibility
{
    bool admissible = false;
    std::vector<std::uint64_t> parts; // i_0, ..., i_e when admissible
};

namespace detail
{

struct AdmissibleSearch
{
    std::uint32_t p, n0;
    std::uint64_t qm1;
    unsigned e;
    std::vector<std::uint32_t> digits;
    std::vector<std::uint64_t> res_weight; // p^k mod (q-1)
    std::set<std::pair<std::size_t, std::vector<std::uint64_t>>> dead;
    std::vector<std::vector<std::uint32_t>> assign; // assign[k][part]

    // State per constrained part: residue * 2 + positive flag.
    bool run(std::size_t k, std::vector<std::uint64_t> &state)
    {
        if (k == digits.size()) {
            for (auto s : state) {
                if (s != 1) { // residue 0 and positive
                    return false;
                }
            }
            return true;
        }
        std::vector<std::uint64_t> key = state;
        std::sort(key.begin(), key.end());
        if (dead.count({k, key}) != 0) {
            return false;
        }
        std::vector<std::uint32_t> split(e, 0);
        if (distribute(k, 0, digits[k], split, state)) {
            return true;
        }
        dead.insert({k, std::move(key)});
        return false;
    }

    bool distribute(std::size_t k, unsigned part, std::uint32_t left, std::vector<std::uint32_t> &split,
                    std::vector<std::uint64_t> &state)
    {
        if (part == e) {
            std::vector<std::uint64_t> next(e);
            for (unsigned t = 0; t < e; ++t) {
                const std::uint64_t r = ((state[t] >> 1) + split[t] * res_weight[k]) % qm1;
                next[t] = r * 2 + ((state[t] & 1) | (split[t] != 0 ? 1 : 0));
            }
            assign[k] = split;
            assign[k].push_back(left);
            return run(k + 1, next);
        }
        for (std::uint32_t a = 0; a <= left; ++a) {
            split[part] = a;
            if (distribute(k, part + 1, left - a, split, state)) {
                return true;
            }
        }
        split[part] = 0;
        return false;
    }
};

} // namespace detail

/// Decides whether i admits an admissible decomposition into e + 1 parts and returns one.
inline Admissibility carlitz_admissible(std::uint64_t i, unsigned e, std::uint32_t q)
{
    const auto pp = prime_power(q);
    if (!pp) {
        throw domain_error("q must be a prime power");
    }
    if (e == 0) {
        return {true, {i}};
    }
    detail::AdmissibleSearch s;
    s.p = pp->first;
    s.n0 = pp->second;
    s.qm1 = q - 1;
    s.e = e;
    s.digits = digits_of(i, s.p);
    s.res_weight.resize(s.digits.size());
    for (std::size_t k = 0; k < s.digits.size(); ++k) {
        s.res_weight[k] = ipow(s.p, static_cast<unsigned>(k % s.n0)) % s.qm1;
    }
    s.assign.resize(s.digits.size());
    // Cheap necessary condition: each constrained part needs a nonzero digit.
    if (digit_sum(i, s.p) < e) {
        return {};
    }
    std::vector<std::uint64_t> state(e, 0);
    if (!s.run(0, state)) {
        return {};
    }
    Admissibility r{true, std::vector<std::uint64_t>(e + 1, 0)};
    std::uint64_t pk = 1;
    for (std::size_t k = 0; k < s.digits.size(); ++k, pk *= s.p) {
        for (unsigned t = 0; t <= e; ++t) {
            r.parts[t] += s.assign[k][t] * pk;
        }
    }
    return r;
}

/// Checks that parts form an admissible decomposition of i.
inline bool is_admissible_decomposition(std::uint64_t i, const std::vector<std::uint64_t> &parts, std::uint32_t q)
{
    if (parts.empty()) {
        return false;
    }
    const std::uint32_t p = prime_power(q)->first;
    std::uint64_t sum = 0, dsum = 0;
    for (std::size_t t = 0; t < parts.size(); ++t) {
        sum += parts[t];
        dsum += digit_sum(parts[t], p);
        if (t + 1 < parts.size() && (parts[t] == 0 || parts[t] % (q - 1) != 0)) {
            return false;
        }
    }
    // Carry-free exactly when digit sums add up.
    return sum == i && dsum == digit_sum(i, p);
}

/// min over 0 <= k < n0 of floor(l_q(j p^k) / (q - 1)): the degree of z(x, -j) over F_q[T].
inline unsigned degree_formula(std::uint64_t j, std::uint32_t q)
{
    const auto pp = prime_power(q);
    if (!pp) {
        throw domain_error("q must be a prime power");
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::uint64_t pk = 1;
    for (std::uint32_t k = 0; k < pp->second; ++k, pk *= pp->first) {
        best = std::min(best, digit_sum(j * pk, q) / (q - 1));
    }
    return static_cast<unsigned>(best);
}

/// z(x, -j) = sum_e S_e(j) x^(-e), stored by coefficient.
template <class Ring>
struct SpecialPoly
{
    Ring ring;
    std::uint64_t j = 0;
    std::vector<typename Ring::Elem> coeffs; // coeffs[e] = S_e(j), trailing zeros trimmed
    unsigned cutoff = 0;                     // last e actually computed

    long degree() const noexcept
    {
        return static_cast<long>(coeffs.size()) - 1;
    }
};

/// Special polynomial over F_q[T]; coefficients beyond degree_formula(j) are
/// computed once more and required to vanish.
inline SpecialPoly<PolyRing> special_poly(const PolyRing &ring, std::uint64_t j, PowerSumCache &cache)
{
    if (&cache.field() != ring.field) {
        throw domain_error("power-sum cache belongs to a different field");
    }
    SpecialPoly<PolyRing> sp{ring, j, {}, 0};
    const unsigned d = degree_formula(j, ring.q());
    for (unsigned e = 0; e <= d + 1; ++e) {
        sp.coeffs.push_back(cache.get(e, j));
    }
    sp.cutoff = d + 1;
    if (!sp.coeffs.back().is_zero()) {
        throw error("power sum S_" + std::to_string(d + 1) + "(" + std::to_string(j) +
                    ") is nonzero beyond the degree formula");
    }
    while (!sp.coeffs.empty() && sp.coeffs.back().is_zero()) {
        sp.coeffs.pop_back();
    }
    return sp;
}

inline SpecialPoly<PolyRing> special_poly(const PolyRing &ring, std::uint64_t j)
{
    PowerSumCache cache(*ring.field);
    return special_poly(ring, j, cache);
}

/// Number of trailing zero coefficients (all at index >= digit_sum(j) + 2) that
/// ends the elliptic scan for one j.
inline constexpr unsigned elliptic_zero_run = 4;

/// Special polynomial over the elliptic ring. No degree formula is available,
/// so coefficients are computed until a run of four zeros starting at
/// e >= l_2(j) + 2 is seen; the cutoff is recorded.
inline SpecialPoly<Elliptic2Ring> special_poly(const Elliptic2Ring &ring, std::uint64_t j)
{
    SpecialPoly<Elliptic2Ring> sp{ring, j, {}, 0};
    const unsigned start = static_cast<unsigned>(digit_sum(j, 2)) + 2;
    unsigned zeros = 0;
    for (unsigned e = 0;; ++e) {
        sp.coeffs.push_back(power_sum(ring, e, j));
        zeros = sp.coeffs.back().is_zero() ? zeros + 1 : 0;
        if (zeros >= elliptic_zero_run && e + 1 >= start + elliptic_zero_run) {
            sp.cutoff = e;
            break;
        }
    }
    while (!sp.coeffs.empty() && sp.coeffs.back().is_zero()) {
        sp.coeffs.pop_back();
    }
    return sp;
}

/// zeta(-j) = W(1) for W(X) = sum_e S_e(j) X^e.
template <class Ring>
typename Ring::Elem zeta_neg(const SpecialPoly<Ring> &sp)
{
    typename Ring::Elem acc = sp.ring.zero();
    for (const auto &c : sp.coeffs) {
        acc += c;
    }
    return acc;
}

/// Order of vanishing of W(X) at X = 1, via Hasse derivatives.
template <class Ring>
unsigned trivial_zero_order(const SpecialPoly<Ring> &sp)
{
    return hasse_multiplicity(sp.coeffs, sp.ring.one());
}

/// Largest number of monics zeta_pos() will sum.
inline constexpr std::uint64_t zeta_pos_monic_limit = std::uint64_t{1} << 22;

/// zeta(j) = sum over monic f of f^(-j) for j >= 1, as a series in pi = 1/T to O(pi^N).
inline Laurent zeta_pos(const PolyRing &ring, std::uint64_t j, long N)
{
    if (j == 0) {
        throw domain_error("zeta(j) is summed here only for j >= 1");
    }
    if (N < 1) {
        throw domain_error("precision must be positive");
    }
    const Fq &f = *ring.field;
    // Degree-e terms have order e*j, so e <= ceil(N/j) suffices.
    const unsigned E = static_cast<unsigned>((static_cast<std::uint64_t>(N) + j - 1) / j);
    std::uint64_t total = 0;
    for (unsigned e = 0; e <= E; ++e) {
        total += ring.count_monics(e);
        if (total > zeta_pos_monic_limit) {
            throw domain_error("zeta(" + std::to_string(j) + ") to O(pi^" + std::to_string(N) + ") needs more than " +
                               std::to_string(zeta_pos_monic_limit) + " monics");
        }
    }
    const PAdic minus_j = PAdic::from_int(f.q(), -static_cast<long long>(j));
    Laurent acc = Laurent::zero(f, "pi", N);
    for (unsigned e = 0; e <= E; ++e) {
        const long shift = static_cast<long>(e * j);
        if (shift >= N) {
            break;
        }
        Laurent part = Laurent::zero(f, "pi", N - shift);
        ring.for_each_monic(e, [&](const Poly &g) {
            part += one_unit_pow(one_unit_of(g, N - shift).second, minus_j, N - shift);
        });
        acc += part.shift(shift);
    }
    return acc;
}

/// sum of f^i over monic f of degree e prime to the monic irreducible v.
inline Poly vadic_power_sum(const PolyRing &ring, unsigned e, const Poly &v, std::uint64_t i)
{
    if (!v.is_monic() || !is_irreducible(v)) {
        throw domain_error("v must be a monic irreducible polynomial, got " + v.to_string());
    }
    Poly acc = ring.zero();
    ring.for_each_monic(e, [&](const Poly &g) {
        if (!v.divides(g)) {
            acc += g.pow_digits(i);
        }
    });
    return acc;
}

/// The same sum as S_e(i) - v^i S_{e-d}(i), d = deg v (S_{<0} = 0).
inline Poly vadic_power_sum_by_removal(const PolyRing &ring, unsigned e, const Poly &v, std::uint64_t i)
{
    if (!v.is_monic() || !is_irreducible(v)) {
        throw domain_error("v must be a monic irreducible polynomial, got " + v.to_string());
    }
    const unsigned d = static_cast<unsigned>(v.deg());
    Poly s = power_sum(ring, e, i);
    if (e >= d) {
        s = s - v.pow_digits(i) * power_sum(ring, e - d, i);
    }
    return s;
}

} // namespace fzeta

#endif
