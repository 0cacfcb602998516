#ifndef FZETA_ZEROS_HPP
#define FZETA_ZEROS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <fzeta/arith.hpp>
#include <fzeta/digit_perm.hpp>
#include <fzeta/error.hpp>
#include <fzeta/laurent.hpp>
#include <fzeta/padic.hpp>
#include <fzeta/poly.hpp>
#include <fzeta/rings.hpp>
#include <fzeta/zeta.hpp>

namespace fzeta
{

/// Lower convex hull of the points (e, ord_pi c_e), c_e = pi^(ej) S_e(j).
///
/// With z(x, -j) = sum_e c_e x^(-e), a segment of slope s and horizontal
/// length m accounts for m roots x with ord_pi x = s.
struct NewtonPolygon
{
    struct Segment
    {
        long e0, o0, e1, o1;
        long length() const noexcept
        {
            return e1 - e0;
        }
        bool integral() const noexcept
        {
            return (o1 - o0) % (e1 - e0) == 0;
        }
        /// Slope rounded toward zero; exact when integral().
        long slope() const noexcept
        {
            return (o1 - o0) / (e1 - e0);
        }
    };

    std::vector<std::pair<long, long>> points;   // every (e, ord c_e) with c_e != 0
    std::vector<std::pair<long, long>> vertices; // hull vertices, increasing e
    std::vector<Segment> segments;

    long degree() const noexcept
    {
        return vertices.empty() ? 0 : vertices.back().first;
    }
    /// True when every segment has length 1: distinct slopes, one root each.
    bool separated() const noexcept
    {
        for (const auto &s : segments) {
            if (s.length() != 1) {
                return false;
            }
        }
        return true;
    }
    /// Root ords with multiplicity, increasing (exact only for integral slopes).
    std::vector<long> root_ords() const
    {
        std::vector<long> out;
        for (const auto &s : segments) {
            for (long k = 0; k < s.length(); ++k) {
                out.push_back(s.slope());
            }
        }
        return out;
    }
};

inline NewtonPolygon newton_polygon_of_points(std::vector<std::pair<long, long>> pts)
{
    if (pts.empty()) {
        throw domain_error("Newton polygon of the zero polynomial");
    }
    NewtonPolygon np;
    np.points = pts;
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<long, long>> hull;
    for (const auto &pt : pts) {
        while (hull.size() >= 2) {
            const auto &a = hull[hull.size() - 2];
            const auto &b = hull.back();
            // Drop b unless it lies strictly below the chord a -> pt.
            const long cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
            if (cross <= 0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(pt);
    }
    np.vertices = hull;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        np.segments.push_back({hull[i - 1].first, hull[i - 1].second, hull[i].first, hull[i].second});
    }
    return np;
}

/// Newton polygon of a special polynomial: ord_pi c_e = e*j - deg S_e(j).
template <class Ring>
NewtonPolygon newton_polygon(const SpecialPoly<Ring> &sp)
{
    std::vector<std::pair<long, long>> pts;
    for (std::size_t e = 0; e < sp.coeffs.size(); ++e) {
        if (!is_zero(sp.coeffs[e])) {
            pts.emplace_back(static_cast<long>(e), static_cast<long>(e * sp.j) - sp.ring.deg(sp.coeffs[e]));
        }
    }
    return newton_polygon_of_points(std::move(pts));
}

/// A zero (x, y0) of zeta(x, y) in the parameter `param`.
struct ZeroRecord
{
    PAdic y0;       // the Z_p coordinate, -j for zeros of z(x, -j)
    Laurent x;      // x-coordinate, known to O(param^abs)
    long ord = 0;   // ord_pi x
    bool exact = false; // x is a finite expansion with all later terms zero
};

namespace detail
{

/// c_e(pi) = pi^(ej) S_e(j)(T = 1/pi), a polynomial in pi.
inline Poly scaled_coeff(const Poly &s, std::uint64_t ej)
{
    std::vector<Fq::elem> c(ej + 1, 0);
    for (std::size_t k = 0; k < s.coeffs().size(); ++k) {
        c[ej - k] = s.coeffs()[k];
    }
    return Poly(s.field(), std::move(c));
}

/// R(x) = sum_e c_e x^(d-e) and R'(x), evaluated exactly at a polynomial x(pi).
inline std::pair<Poly, Poly> eval_with_derivative(const std::vector<Poly> &c, const Poly &x)
{
    const Fq &f = x.field();
    Poly r(f), dr(f);
    const std::size_t d = c.size() - 1;
    for (std::size_t e = 0; e <= d; ++e) {
        // Horner over descending powers of x: coefficient of x^(d-e) is c_e.
        dr = dr * x + r;
        r = r * x + c[e];
    }
    return {r, dr};
}

inline Laurent pi_poly_as_laurent(const Poly &a, long abs)
{
    return Laurent::from_pi_poly(a, "pi", abs);
}

} // namespace detail

/// Roots of z(x, -j) in F_q((pi)), one per Newton-polygon segment, increasing
/// ord, each known to N terms past its leading one.
///
/// Each root is seeded from its segment and refined by Newton's method, with
/// R(x) evaluated exactly on the truncated expansion; the root is certified
/// once ord R(x) - ord R'(x) >= ord x + N, which bounds ord(x - root) from below.
/// A root reached exactly (R(x) = 0) is flagged as exact. Ties in the polygon
/// or a vanishing derivative mean a multiple root, reported as an error.
inline std::vector<ZeroRecord> roots_in_K(const SpecialPoly<PolyRing> &sp, long N)
{
    const Fq &f = *sp.ring.field;
    const NewtonPolygon np = newton_polygon(sp);
    if (!np.separated()) {
        throw error("z(x,-" + std::to_string(sp.j) +
                    ") has a Newton segment of length > 1: roots are not separated by absolute value (simplicity "
                    "violation report)");
    }
    const std::size_t d = sp.coeffs.size() - 1;
    std::vector<Poly> c(d + 1, Poly(f));
    for (std::size_t e = 0; e <= d; ++e) {
        c[e] = detail::scaled_coeff(sp.coeffs[e], e * sp.j);
    }
    std::vector<ZeroRecord> out;
    for (const auto &seg : np.segments) {
        const long s = seg.slope();
        const std::size_t e = static_cast<std::size_t>(seg.e1);
        // Dominant balance c_{e-1} x + c_e = 0 fixes the leading term.
        const Fq::elem lead = f.neg(f.div(c[e].coeff(static_cast<std::size_t>(seg.o1)),
                                          c[e - 1].coeff(static_cast<std::size_t>(seg.o0))));
        Poly x = Poly::monomial(f, lead, static_cast<std::size_t>(s));
        const long work = N + s + 8;
        bool exact = false;
        long achieved = 0;
        for (int iter = 0;; ++iter) {
            auto [r, dr] = detail::eval_with_derivative(c, x);
            if (r.is_zero()) {
                exact = true;
                break;
            }
            if (dr.is_zero()) {
                throw error("derivative vanishes at a root of z(x,-" + std::to_string(sp.j) +
                            ") (simplicity violation report)");
            }
            const long gap = r.low_deg() - dr.low_deg();
            achieved = gap;
            if (gap >= s + N) {
                // x agrees with the root below s + N; the root may be that truncation exactly.
                std::vector<Fq::elem> head(x.coeffs().begin(),
                                           x.coeffs().begin() + std::min<long>(s + N, x.deg() + 1));
                Poly xt(f, std::move(head));
                if (detail::eval_with_derivative(c, xt).first.is_zero()) {
                    x = std::move(xt);
                    exact = true;
                }
                break;
            }
            if (iter > 64) {
                throw precision_error("Newton refinement stalled for z(x,-" + std::to_string(sp.j) + ")", achieved,
                                      s + N);
            }
            const long rel = work + 2;
            const Laurent num = detail::pi_poly_as_laurent(r, r.low_deg() + rel);
            const Laurent den = detail::pi_poly_as_laurent(dr, dr.low_deg() + rel);
            const Laurent delta = (num / den).truncate(work);
            std::vector<Fq::elem> dc(static_cast<std::size_t>(work), 0);
            for (long k = std::max(0L, delta.ord()); k < delta.abs_prec(); ++k) {
                dc[static_cast<std::size_t>(k)] = delta.coeff(k);
            }
            if (delta.ord() < 0) {
                throw error("Newton step left the seed's disc; polygon data inconsistent");
            }
            x = x - Poly(f, std::move(dc));
        }
        ZeroRecord z{PAdic::from_int(f.q(), -static_cast<long long>(sp.j)),
                     Laurent::from_pi_poly(x, "pi", s + N), s, exact};
        if (z.x.ord() != s) {
            throw error("refined root left its Newton segment");
        }
        out.push_back(std::move(z));
    }
    return out;
}

/// The unit u = pi1/pi2, written in pi1, for a positive reparametrization pi1 = g(pi2).
inline OneUnit gauge_unit_from_reparam(const Laurent &g, const std::string &param1)
{
    if (g.is_zero() || g.ord() != 1 || g.lead() != 1) {
        throw domain_error("reparametrization must be pi1 = pi2 + O(pi2^2)");
    }
    // g/pi2 in pi2, then pi2 = h(pi1) with h the compositional inverse of g.
    const Laurent ratio = g.shift(-1);
    const Laurent h = reversion(g).retag(param1);
    return OneUnit(recompose(ratio, h));
}

/// Transport of a zero x (in pi1) at y0 to the parameter pi2 with pi1/pi2 = u:
/// x' = u^y0 x, re-expanded in pi2 = pi1 u^(-1).
inline Laurent gauge_transform_zero(const Laurent &x, const PAdic &y0, const OneUnit &u, long N,
                                    const std::string &param2 = "pi2")
{
    const Laurent &uv = u.value();
    x.check(uv);
    if (x.is_zero()) {
        throw domain_error("zero x-coordinate cannot be transported");
    }
    const long s = x.ord();
    const Laurent moved = (one_unit_pow(u, y0, N) * x).truncate(s + N);
    // pi2 = pi1 / u as a series in pi1, then invert to express pi1 in pi2.
    const Laurent h = (uv.inv().truncate(N + 1)).shift(1);
    const Laurent g = reversion(h.retag(param2));
    const Laurent out = recompose(moved, g);
    if (out.rel_prec() < 1) {
        throw precision_error("gauge transport lost every known term", out.rel_prec(), 1);
    }
    return out;
}

/// An exact zero's expansion known (as zeros) out to O(pi^abs).
inline Laurent padded_exact(const ZeroRecord &z, long abs)
{
    if (!z.exact) {
        throw domain_error("only exact expansions can be padded");
    }
    std::vector<Fq::elem> c(static_cast<std::size_t>(std::max(0L, abs - z.x.ord())), 0);
    for (long k = z.x.ord(); k < std::min(abs, z.x.abs_prec()); ++k) {
        c[static_cast<std::size_t>(k - z.x.ord())] = z.x.coeff(k);
    }
    return Laurent::from_coeffs(z.x.field(), z.x.param(), z.x.ord(), std::move(c), abs);
}

/// The point s_{-j} = (pi^j, -j).
inline ZeroRecord trivial_point(const Fq &f, std::uint64_t j, long N)
{
    const long jl = static_cast<long>(j);
    return {PAdic::from_int(f.q(), -static_cast<long long>(j)),
            Laurent::monomial(f, "pi", 1, jl, std::max(N, jl + 1)), jl, true};
}

/// Result of invariant_prefix().
struct PrefixReport
{
    long length = 0;     // number of terms from ord x on that never changed
    Laurent prefix;      // the invariant terms, O(pi^(ord+length))
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// Longest run of leading terms of a zero unchanged by `samples` random
/// parameter changes u = 1 + sum_{k=1..N} a_k pi^k (seeded mt19937_64, a_k
/// uniform in F_q). The comparison is against the zero itself, capped at N.
inline PrefixReport invariant_prefix(const ZeroRecord &z, std::size_t samples, long N, std::uint64_t seed)
{
    const Fq &f = z.x.field();
    const long s = z.ord;
    const Laurent ref = z.exact ? padded_exact(z, s + N) : z.x.truncate(s + N);
    long len = std::min(N, ref.abs_prec() - s);
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < samples && len > 0; ++t) {
        std::vector<Fq::elem> a(static_cast<std::size_t>(N + 1), 0);
        a[0] = 1;
        for (long k = 1; k <= N; ++k) {
            a[static_cast<std::size_t>(k)] = static_cast<Fq::elem>(rng() % f.q());
        }
        const OneUnit u(Laurent::from_coeffs(f, z.x.param(), 0, std::move(a), N + 1));
        const Laurent moved = gauge_transform_zero(ref, z.y0, u, N, "pi2").retag(z.x.param());
        long agree = 0;
        while (agree < len && s + agree < moved.abs_prec() && moved.coeff(s + agree) == ref.coeff(s + agree)) {
            ++agree;
        }
        len = agree;
    }
    return {len, z.x.truncate(s + len), samples, seed};
}

/// Smallest rho_*(i) over i >= A: the first exponent the permuted expansion cannot certify.
inline long long digit_act_bound(const DigitPerm &rho, long long A, std::uint32_t q)
{
    const std::uint32_t M = rho.support_bound();
    long double qm = 1;
    for (std::uint32_t i = 0; i < M; ++i) {
        qm *= q;
    }
    if (qm > static_cast<long double>(1 << 24)) {
        throw domain_error("digit permutation support too large to certify precision");
    }
    const long long Q = static_cast<long long>(qm);
    const long long H = A / Q;
    long long best = (H + 1) * Q; // any i with higher digits above H's block, low part 0
    for (long long L = A % Q; L < Q; ++L) {
        best = std::min(best, H * Q + rho_star(rho, L, q));
    }
    return best;
}

/// rho acting on a zero: pi-exponents moved by rho_*, y0 by the hatted action.
///
/// The image is certified below min_{i >= abs} rho_*(i); terms whose images
/// fall beyond that are dropped. An exact zero stays exact. Throws if the
/// certified window ends below `min_abs`.
inline ZeroRecord digit_act_zero(const DigitPerm &rho, const ZeroRecord &z, long min_abs = 0)
{
    const Fq &f = z.x.field();
    const std::uint32_t q = f.q();
    if (z.x.ord() < 0) {
        throw domain_error("digit action is defined here on expansions with nonnegative exponents");
    }
    long long B;
    long long top = 0;
    std::vector<std::pair<long long, Fq::elem>> terms;
    for (long k = z.x.ord(); k < z.x.abs_prec(); ++k) {
        const Fq::elem c = z.x.coeff(k);
        if (c != 0) {
            const long long img = rho_star(rho, k, q);
            terms.emplace_back(img, c);
            top = std::max(top, img);
        }
    }
    if (z.exact) {
        B = std::max<long long>(top + 1, z.x.abs_prec());
    } else {
        B = digit_act_bound(rho, z.x.abs_prec(), q);
    }
    if (B < min_abs) {
        throw precision_error("digit action certifies only O(pi^" + std::to_string(B) + ")", B, min_abs);
    }
    std::vector<Fq::elem> c(static_cast<std::size_t>(B), 0);
    for (auto [img, v] : terms) {
        if (img < B) {
            c[static_cast<std::size_t>(img)] = v;
        }
    }
    const Laurent x = Laurent::from_coeffs(f, z.x.param(), 0, std::move(c), B);
    return {rho_hat_star(rho, z.y0), x, x.is_zero() ? B : x.ord(), z.exact};
}

/// Comparison of root ords of z(x, -j) with those of its collapse.
struct CollapseReport
{
    std::uint64_t j = 0, jc = 0;
    DigitPerm rho;                 // rho(i) = e_i, so rho_*(jc) = j
    std::vector<long> ords_jc;     // ords of the zeros for jc, increasing
    std::vector<long> mapped;      // rho_* of those
    std::vector<long> ords_j;      // ords of the zeros for j, increasing
    bool holds = false;
};

inline CollapseReport collapse_compare(std::uint64_t j, std::uint32_t q, PowerSumCache &cache)
{
    const std::uint32_t p = prime_power(q)->first;
    const PAdic y = PAdic::from_int(q, static_cast<long long>(j));
    for (auto dgt : y.digits()) {
        if (dgt >= p) {
            throw domain_error("collapse comparison needs every base-" + std::to_string(q) + " digit of " +
                               std::to_string(j) + " below p = " + std::to_string(p));
        }
    }
    const PolyRing ring(cache.field());
    CollapseReport r;
    r.j = j;
    r.jc = static_cast<std::uint64_t>(collapse(y).to_int_checked());
    r.rho = collapse_permutation(y);
    r.ords_j = newton_polygon(special_poly(ring, j, cache)).root_ords();
    r.ords_jc = newton_polygon(special_poly(ring, r.jc, cache)).root_ords();
    for (long o : r.ords_jc) {
        r.mapped.push_back(static_cast<long>(rho_star(r.rho, o, q)));
    }
    r.holds = r.mapped == r.ords_j;
    return r;
}

/// One row of the orbit comparison: a zero of z(x,-j) moved by the witness
/// rho next to the zero of z(x,-rho_*(j)) with the matching ord.
struct OrbitRow
{
    ZeroRecord source, image, target;
    long source_prefix = 0, target_prefix = 0;
    long compared = 0;  // exponents compared (within both invariant windows)
    bool agrees = false;
};

struct OrbitReport
{
    std::uint64_t j = 0, to = 0;
    DigitPerm rho; // rho_*(j) = to
    std::vector<OrbitRow> rows;
    bool all_agree() const noexcept
    {
        for (const auto &r : rows) {
            if (!r.agrees) {
                return false;
            }
        }
        return !rows.empty();
    }
};

/// Moves the invariant-prefix part of each zero of z(x,-j) by a witness rho
/// with rho_*(j) = to and compares it with the invariant-prefix part of the
/// zero of z(x,-to) of the image ord. Evidence, not a theorem check.
inline OrbitReport orbit_compare(std::uint64_t j, std::uint64_t to, long N, std::size_t samples, std::uint64_t seed,
                                 PowerSumCache &cache)
{
    const Fq &f = cache.field();
    const std::uint32_t q = f.q();
    const auto w = orbit_witness(PAdic::from_int(q, static_cast<long long>(j)),
                                 PAdic::from_int(q, static_cast<long long>(to)));
    if (!w) {
        throw domain_error(std::to_string(j) + " and " + std::to_string(to) + " lie in different digit orbits");
    }
    const PolyRing ring(f);
    OrbitReport rep;
    rep.j = j;
    rep.to = to;
    rep.rho = *w;
    const auto src = roots_in_K(special_poly(ring, j, cache), N);
    const auto dst = roots_in_K(special_poly(ring, to, cache), N);
    for (const auto &a : src) {
        const PrefixReport pa = invariant_prefix(a, samples, N, seed);
        ZeroRecord window{a.y0, pa.prefix, a.ord, a.exact && pa.length == N};
        if (window.exact) {
            window.x = a.x;
        }
        const ZeroRecord img = digit_act_zero(rep.rho, window);
        OrbitRow row{a, img, img, pa.length, 0, 0, false};
        const long want = rho_star(rep.rho, a.ord, q);
        auto it = std::find_if(dst.begin(), dst.end(), [&](const ZeroRecord &b) { return b.ord == want; });
        if (it != dst.end()) {
            const PrefixReport pb = invariant_prefix(*it, samples, N, seed);
            row.target = *it;
            row.target_prefix = pb.length;
            const long top = std::min(img.x.abs_prec(), it->ord + pb.length);
            bool ok = img.ord == it->ord;
            for (long k = it->ord; ok && k < top; ++k) {
                ok = img.x.coeff(k) == it->x.coeff(k);
                ++row.compared;
            }
            row.agrees = ok && row.compared > 0;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace fzeta

#endif
