#ifndef FZETA_SCAN_HPP
#define FZETA_SCAN_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <fzeta/arith.hpp>
#include <fzeta/error.hpp>
#include <fzeta/rings.hpp>
#include <fzeta/zeta.hpp>

namespace fzeta
{

/// Special-polynomial coefficients S_e(j) over the elliptic ring for all 1 <= j <= j_max.
///
/// Odd j are summed layer by layer in e: for each element f of degree e the
/// powers f, f^3, f^5, ... are built by repeated multiplication with f^2, and
/// only j whose stopping rule has not fired are accumulated. Even j = 2^a o
/// reuse S_e(j) = S_e(o)^(2^a). The stopping rule is the one of
/// special_poly(Elliptic2Ring, j).
inline std::vector<SpecialPoly<Elliptic2Ring>> elliptic_special_polys(std::uint64_t j_max, unsigned e_cap = 26)
{
    const Elliptic2Ring ring;
    std::vector<std::uint64_t> odd;
    for (std::uint64_t j = 1; j <= j_max; j += 2) {
        odd.push_back(j);
    }
    const std::size_t n = odd.size();
    std::vector<std::vector<Elliptic2Elem>> coeffs(n, std::vector<Elliptic2Elem>{ring.one(), ring.zero()});
    std::vector<unsigned> zeros(n, 1), start(n), cutoff(n, 0);
    std::vector<bool> open(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        start[i] = static_cast<unsigned>(digit_sum(odd[i], 2)) + 2;
    }
    for (unsigned e = 2;; ++e) {
        std::size_t last = n;
        for (std::size_t i = n; i-- > 0;) {
            if (open[i]) {
                last = i;
                break;
            }
        }
        if (last == n) {
            break;
        }
        if (e > e_cap) {
            throw precision_error("elliptic scan did not stop below the degree cap", e, e_cap);
        }
        std::vector<Elliptic2Elem> acc(last + 1);
        const std::uint64_t count = ring.count_monics(e);
        for (std::uint64_t k = 0; k < count; ++k) {
            const Elliptic2Elem f = Elliptic2Ring::monic_at(e, k);
            const Elliptic2Elem f2 = f.square();
            Elliptic2Elem cur = f;
            for (std::size_t i = 0; i <= last; ++i) {
                if (open[i]) {
                    acc[i] += cur;
                }
                if (i < last) {
                    cur *= f2;
                }
            }
        }
        for (std::size_t i = 0; i <= last; ++i) {
            if (!open[i]) {
                continue;
            }
            zeros[i] = acc[i].is_zero() ? zeros[i] + 1 : 0;
            coeffs[i].push_back(std::move(acc[i]));
            if (zeros[i] >= elliptic_zero_run && e + 1 >= start[i] + elliptic_zero_run) {
                open[i] = false;
                cutoff[i] = e;
            }
        }
    }
    std::vector<SpecialPoly<Elliptic2Ring>> out;
    out.reserve(j_max);
    for (std::uint64_t j = 1; j <= j_max; ++j) {
        std::uint64_t o = j;
        unsigned a = 0;
        while (o % 2 == 0) {
            o /= 2;
            ++a;
        }
        const std::size_t i = static_cast<std::size_t>(o / 2);
        SpecialPoly<Elliptic2Ring> sp{ring, j, coeffs[i], cutoff[i]};
        for (auto &c : sp.coeffs) {
            for (unsigned s = 0; s < a; ++s) {
                c = c.square();
            }
        }
        while (!sp.coeffs.empty() && sp.coeffs.back().is_zero()) {
            sp.coeffs.pop_back();
        }
        out.push_back(std::move(sp));
    }
    return out;
}

/// Orbit id of j under base-q digit permutations: the sorted nonzero digits.
inline std::string digit_orbit_id(std::uint64_t j, std::uint32_t q)
{
    std::vector<std::uint32_t> d;
    for (auto c : digits_of(j, q)) {
        if (c != 0) {
            d.push_back(c);
        }
    }
    std::sort(d.begin(), d.end());
    std::string s = "{";
    for (std::size_t k = 0; k < d.size(); ++k) {
        s += (k ? "," : "") + std::to_string(d[k]);
    }
    return s + "}";
}

struct OrbitScanRow
{
    std::uint64_t j = 0;
    std::uint64_t ell = 0;  // l_q(j)
    long degree = 0;        // deg z(x, -j)
    unsigned cutoff = 0;    // last e computed
    unsigned order = 0;     // trivial-zero order
    std::string orbit;      // digit multiset
    bool irregular = false; // order above the lower bound 1
};

struct OrbitSummary
{
    std::string orbit;
    std::vector<std::uint64_t> members;
    std::vector<unsigned> orders;
    bool consistent = true;
};

struct OrbitScan
{
    std::string ring;
    std::uint32_t q = 0;
    std::uint64_t j_max = 0;
    std::vector<OrbitScanRow> rows;          // sorted by (orbit, j)
    std::vector<OrbitSummary> orbits;        // sorted by orbit id
    std::map<std::uint64_t, std::map<unsigned, unsigned>> ell_vs_order; // l_q -> order -> count

    bool all_consistent() const noexcept
    {
        return std::all_of(orbits.begin(), orbits.end(), [](const OrbitSummary &o) { return o.consistent; });
    }
    bool all_regular() const noexcept
    {
        return std::none_of(rows.begin(), rows.end(), [](const OrbitScanRow &r) { return r.irregular; });
    }
};

namespace detail
{

template <class Ring>
void add_scan_row(OrbitScan &s, const SpecialPoly<Ring> &sp, std::uint32_t q)
{
    OrbitScanRow r;
    r.j = sp.j;
    r.ell = digit_sum(sp.j, q);
    r.degree = sp.degree();
    r.cutoff = sp.cutoff;
    r.order = trivial_zero_order(sp);
    r.orbit = digit_orbit_id(sp.j, q);
    r.irregular = r.order > 1;
    s.rows.push_back(std::move(r));
}

inline void finish_scan(OrbitScan &s)
{
    std::sort(s.rows.begin(), s.rows.end(), [](const OrbitScanRow &a, const OrbitScanRow &b) {
        return a.ell != b.ell ? a.ell < b.ell : a.orbit != b.orbit ? a.orbit < b.orbit : a.j < b.j;
    });
    for (const auto &r : s.rows) {
        if (s.orbits.empty() || s.orbits.back().orbit != r.orbit) {
            s.orbits.push_back({r.orbit, {}, {}, true});
        }
        auto &o = s.orbits.back();
        o.members.push_back(r.j);
        o.orders.push_back(r.order);
        o.consistent = o.consistent && r.order == o.orders.front();
        ++s.ell_vs_order[r.ell][r.order];
    }
}

} // namespace detail

/// Trivial-zero orders over F_q[T] for 1 <= j <= j_max with (q-1) | j,
/// optionally restricted to l_q(j) == ell_filter.
inline OrbitScan orbit_scan_poly(std::uint32_t q, std::uint64_t j_max, long ell_filter = -1)
{
    const PolyRing ring(Fq::get(q));
    PowerSumCache cache(*ring.field);
    OrbitScan s{ring.name(), q, j_max, {}, {}, {}};
    for (std::uint64_t j = q - 1; j <= j_max; j += q - 1) {
        if (ell_filter >= 0 && digit_sum(j, q) != static_cast<std::uint64_t>(ell_filter)) {
            continue;
        }
        detail::add_scan_row(s, special_poly(ring, j, cache), q);
    }
    detail::finish_scan(s);
    return s;
}

/// Same scan over the elliptic ring, every j >= 1 (q_inf - 1 = 1).
inline OrbitScan orbit_scan_elliptic(std::uint64_t j_max, long ell_filter = -1)
{
    OrbitScan s{Elliptic2Ring().name(), 2, j_max, {}, {}, {}};
    for (const auto &sp : elliptic_special_polys(j_max)) {
        if (ell_filter >= 0 && digit_sum(sp.j, 2) != static_cast<std::uint64_t>(ell_filter)) {
            continue;
        }
        detail::add_scan_row(s, sp, 2);
    }
    detail::finish_scan(s);
    return s;
}

} // namespace fzeta

#endif
