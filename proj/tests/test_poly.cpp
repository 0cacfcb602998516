#include <gtest/gtest.h>

#include <random>

#include <fzeta/poly.hpp>
#include <fzeta/ratfun.hpp>

using namespace fzeta;

TEST(Poly, DivisionWithRemainder)
{
    const Fq &f = Fq::get(2);
    const Poly t3 = Poly::monomial(f, 1, 3);
    const Poly g = Poly::parse(f, "T^2+T");
    auto [quot, rem] = t3.divrem(g);
    EXPECT_EQ(quot, Poly::parse(f, "T+1"));
    EXPECT_EQ(rem, Poly::parse(f, "T"));
    EXPECT_THROW(t3.divrem(Poly(f)), domain_error);
}

TEST(Poly, ParseAndRender)
{
    const Fq &f = Fq::get(3);
    const Poly a = Poly::parse(f, "2T^9+2T^3+2T");
    EXPECT_EQ(a.deg(), 9);
    EXPECT_EQ(a.to_string(), "2T^9+2T^3+2T");
    EXPECT_EQ(Poly::parse(f, "-T+1"), Poly::parse(f, "2T+1"));
    EXPECT_EQ(Poly(f).to_string(), "0");
}

TEST(Poly, DivRemInvariantRandomized)
{
    const Fq &f = Fq::get(9);
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        std::vector<Fq::elem> ac(rng() % 12), bc(1 + rng() % 6);
        for (auto &c : ac) c = static_cast<Fq::elem>(rng() % 9);
        for (auto &c : bc) c = static_cast<Fq::elem>(rng() % 9);
        bc.back() = 1 + static_cast<Fq::elem>(rng() % 8);
        const Poly a(f, ac), b(f, bc);
        auto [qq, r] = a.divrem(b);
        EXPECT_EQ(qq * b + r, a);
        EXPECT_LT(r.deg(), b.deg());
    }
}

TEST(Poly, PowDigitsMatchesPlainPower)
{
    const Fq &f = Fq::get(4);
    const Poly a = Poly(f, {2, 3, 1});
    for (std::uint64_t j = 0; j < 40; ++j) {
        EXPECT_EQ(a.pow_digits(j), a.pow(j)) << j;
    }
}

TEST(Poly, IrreducibleCounts)
{
    // Number of monic irreducibles of degree d over F_q: (1/d) sum_{e|d} mu(e) q^(d/e).
    EXPECT_EQ(monic_irreducibles(Fq::get(2), 4).size(), 3u);
    EXPECT_EQ(monic_irreducibles(Fq::get(3), 3).size(), 8u);
    EXPECT_EQ(monic_irreducibles(Fq::get(4), 2).size(), 6u);
}

TEST(Poly, GcdAndValuation)
{
    const Fq &f = Fq::get(5);
    const Poly P = Poly::parse(f, "T^2+2");
    const Poly a = P.pow(3) * Poly::parse(f, "T+1");
    EXPECT_EQ(valuation(a, P), 3u);
    EXPECT_EQ(gcd(a, P.pow(5)), P.pow(3));
}

TEST(RatFun, CanonicalForm)
{
    const Fq &f = Fq::get(3);
    const RatFun r(Poly::parse(f, "2T^2+2T"), Poly::parse(f, "2T"));
    EXPECT_TRUE(r.is_polynomial());
    EXPECT_EQ(r.num(), Poly::parse(f, "T+1"));
    const RatFun s(Poly::one(f), Poly::parse(f, "T"));
    EXPECT_EQ(s + s.inv() - s.inv(), s);
    EXPECT_EQ((s * s.inv()), RatFun(Poly::one(f)));
    EXPECT_THROW(RatFun(Poly::one(f), Poly(f)), domain_error);
}
