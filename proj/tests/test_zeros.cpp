#include <gtest/gtest.h>

#include <random>

#include <fzeta/zeros.hpp>

using namespace fzeta;

namespace
{

std::vector<std::string> rendered_roots(std::uint32_t q, std::uint64_t j, long N = 16)
{
    std::vector<std::string> out;
    for (const auto &z : roots_in_K(special_poly(PolyRing(q), j), N)) {
        out.push_back(z.x.to_string(false) + (z.exact ? "" : "+..."));
    }
    return out;
}

} // namespace

TEST(NewtonPolygon, RootOrds)
{
    EXPECT_EQ(newton_polygon(special_poly(PolyRing(2), 3)).root_ords(), (std::vector<long>{1, 3}));
    EXPECT_EQ(newton_polygon(special_poly(PolyRing(2), 5)).root_ords(), (std::vector<long>{1, 5}));
    EXPECT_EQ(newton_polygon(special_poly(PolyRing(3), 13)).root_ords(), (std::vector<long>{4}));
    EXPECT_THROW(newton_polygon_of_points({}), domain_error);
}

TEST(NewtonPolygon, HullOfCollinearAndTiedPoints)
{
    const auto np = newton_polygon_of_points({{0, 0}, {1, 2}, {2, 4}, {3, 9}});
    ASSERT_EQ(np.segments.size(), 2u);
    EXPECT_EQ(np.segments[0].length(), 2);
    EXPECT_FALSE(np.separated());
    EXPECT_EQ(np.root_ords(), (std::vector<long>{2, 2, 5}));
}

TEST(Roots, ExactFiniteExpansions)
{
    EXPECT_EQ(rendered_roots(2, 3), (std::vector<std::string>{"pi+pi^2", "pi^3"}));
    EXPECT_EQ(rendered_roots(2, 5), (std::vector<std::string>{"pi+pi^4", "pi^5"}));
    EXPECT_EQ(rendered_roots(3, 13), (std::vector<std::string>{"pi^4+pi^10+pi^12"}));
}

// Re-substitution: each certified root makes z(x,-j) vanish to the stated precision.
TEST(Roots, ResubstitutionAndSimplicity)
{
    for (std::uint32_t q : {2u, 3u}) {
        const PolyRing ring(q);
        PowerSumCache cache(*ring.field);
        for (std::uint64_t j = 1; j <= 120; ++j) {
            const auto sp = special_poly(ring, j, cache);
            const long N = 20;
            const auto roots = roots_in_K(sp, N);
            ASSERT_EQ(static_cast<long>(roots.size()), sp.degree());
            for (std::size_t i = 0; i < roots.size(); ++i) {
                const auto &z = roots[i];
                if (i > 0) {
                    EXPECT_LT(roots[i - 1].ord, z.ord);
                }
                // sum_e c_e x^(-e) with x known to O(pi^N): vanishes beyond N + (relative shift).
                Laurent acc = Laurent::zero(*ring.field, "pi", 400);
                const Laurent xinv = z.x.inv();
                Laurent xp = Laurent::monomial(*ring.field, "pi", 1, 0, 400);
                for (std::size_t e = 0; e < sp.coeffs.size(); ++e) {
                    const Laurent c = Laurent::from_T_poly(sp.coeffs[e], "pi", 400).shift(static_cast<long>(e * j));
                    acc += c * xp;
                    xp = xp * xinv;
                }
                EXPECT_TRUE(acc.is_zero()) << "q=" << q << " j=" << j << " root " << z.x;
            }
        }
    }
}

TEST(Gauge, IdentityAndLeadingTerm)
{
    const Fq &f = Fq::get(2);
    const auto roots = roots_in_K(special_poly(PolyRing(2), 3), 12);
    const ZeroRecord &beta = roots[0];
    const Laurent x = padded_exact(beta, 13);
    const OneUnit one(Laurent::monomial(f, "pi", 1, 0, 13));
    EXPECT_TRUE(gauge_transform_zero(x, beta.y0, one, 12).retag("pi").agrees_with(x));
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        std::vector<Fq::elem> a(13, 0);
        a[0] = 1;
        for (std::size_t k = 1; k < a.size(); ++k) a[k] = rng() & 1;
        const Laurent out = gauge_transform_zero(x, beta.y0, OneUnit(Laurent::from_coeffs(f, "pi", 0, a, 13)), 12);
        EXPECT_EQ(out.ord(), 1);
        EXPECT_EQ(out.lead(), 1u);
    }
}

// pi1 = pi2 + a2 pi2^2 + a3 pi2^3: the transported beta-zero starts pi2+pi2^2+0*pi2^3.
TEST(Gauge, ReparametrizationKeepsThreeTerms)
{
    const Fq &f = Fq::get(2);
    const auto beta = roots_in_K(special_poly(PolyRing(2), 3), 12)[0];
    const Laurent x = padded_exact(beta, 13);
    for (Fq::elem a2 = 0; a2 < 2; ++a2) {
        for (Fq::elem a3 = 0; a3 < 2; ++a3) {
            const Laurent g = Laurent::from_coeffs(f, "pi2", 1, {1, a2, a3}, 14);
            const OneUnit u = gauge_unit_from_reparam(g, "pi");
            const Laurent out = gauge_transform_zero(x, beta.y0, u, 12);
            EXPECT_EQ(out.param(), "pi2");
            EXPECT_EQ(out.truncate(4).to_string(), "pi2+pi2^2+O(pi2^4)");
        }
    }
    EXPECT_THROW(gauge_unit_from_reparam(Laurent::from_coeffs(f, "pi2", 2, {1}, 6), "pi"), domain_error);
}

TEST(Gauge, RecomposeMultiplyBack)
{
    const Fq &f = Fq::get(2);
    const Laurent g = Laurent::from_coeffs(f, "pi2", 1, {1, 1}, 8);
    const Laurent x = Laurent::monomial(f, "pi1", 1, -1, 8);
    const Laurent y = recompose(x, g);
    EXPECT_EQ((y * g).truncate(4).to_string(false), "1");
}

TEST(InvariantPrefix, Examples)
{
    const auto roots = roots_in_K(special_poly(PolyRing(2), 3), 12);
    const auto beta = invariant_prefix(roots[0], 60, 12, 1);
    EXPECT_GE(beta.length, 3);
    EXPECT_EQ(beta.prefix.truncate(4).to_string(), "pi+pi^2+O(pi^4)");
    const auto alpha = invariant_prefix(roots[1], 60, 12, 1);
    EXPECT_EQ(alpha.length, 12);
    EXPECT_EQ(invariant_prefix(roots[0], 0, 12, 1).length, 12);
    // Same seed, same answer.
    EXPECT_EQ(invariant_prefix(roots[0], 60, 12, 1).length, beta.length);
}

TEST(DigitAction, OrbitOfThreeAndFive)
{
    const Fq &f = Fq::get(2);
    const auto rho = *orbit_witness(PAdic::from_int(2, 3), PAdic::from_int(2, 5));
    const auto src = roots_in_K(special_poly(PolyRing(2), 3), 16);
    const auto dst = roots_in_K(special_poly(PolyRing(2), 5), 16);
    for (std::size_t i = 0; i < 2; ++i) {
        const ZeroRecord img = digit_act_zero(rho, src[i]);
        EXPECT_EQ(img.y0.to_int_checked(), -5);
        EXPECT_TRUE(img.exact);
        EXPECT_EQ(img.x.to_string(false), dst[i].x.to_string(false));
    }
    // rho_*(s_{-j}) = s_{-rho_*(j)}.
    std::mt19937_64 rng(6);
    for (int it = 0; it < 100; ++it) {
        const DigitPerm r = random_digit_perm(rng, 7);
        const std::uint64_t j = rng() % 128;
        const ZeroRecord moved = digit_act_zero(r, trivial_point(f, j, 8));
        const ZeroRecord expect = trivial_point(f, static_cast<std::uint64_t>(rho_star(r, static_cast<long long>(j), 2)), 8);
        EXPECT_EQ(moved.y0, expect.y0);
        EXPECT_EQ(moved.x.to_string(false), expect.x.to_string(false));
    }
}

TEST(DigitAction, IsotropyOfThirteen)
{
    const auto z = roots_in_K(special_poly(PolyRing(3), 13), 16)[0];
    for (const char *cyc : {"(0 1)", "(1 2)", "(0 2)", "(0 1 2)", "(0 2 1)"}) {
        const ZeroRecord img = digit_act_zero(DigitPerm::parse_cycles(cyc), z);
        EXPECT_EQ(img.y0, z.y0);
        EXPECT_EQ(img.x.to_string(false), z.x.to_string(false)) << cyc;
    }
}

TEST(DigitAction, PrecisionWindow)
{
    const Fq &f = Fq::get(2);
    // x known to O(pi^4); swapping positions 1 and 2 sends unknown exponent 4 to 2.
    const ZeroRecord z{PAdic::from_int(2, -3), Laurent::from_coeffs(f, "pi", 1, {1, 1, 0}, 4), 1, false};
    const ZeroRecord img = digit_act_zero(DigitPerm::swap(1, 2), z);
    EXPECT_EQ(img.x.abs_prec(), 2);
    EXPECT_THROW(digit_act_zero(DigitPerm::swap(1, 2), z, 6), precision_error);
}

TEST(Collapse, Examples)
{
    PowerSumCache c2(Fq::get(2)), c3(Fq::get(3)), c4(Fq::get(4));
    const auto r = collapse_compare(5, 2, c2);
    EXPECT_EQ(r.jc, 3u);
    EXPECT_EQ(r.mapped, (std::vector<long>{1, 5}));
    EXPECT_TRUE(r.holds);
    const auto r3 = collapse_compare(91, 3, c3);
    EXPECT_EQ(r3.jc, 13u);
    EXPECT_EQ(r3.ords_j, (std::vector<long>{10}));
    EXPECT_TRUE(r3.holds);
    EXPECT_TRUE(collapse_compare(7, 2, c2).holds);
    EXPECT_THROW(collapse_compare(2, 4, c4), domain_error);
}

TEST(Orbit, EvidenceForThreeToFive)
{
    PowerSumCache cache(Fq::get(2));
    const auto rep = orbit_compare(3, 5, 12, 40, 1, cache);
    ASSERT_EQ(rep.rows.size(), 2u);
    EXPECT_TRUE(rep.all_agree());
}
