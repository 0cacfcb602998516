#include <gtest/gtest.h>

#include <random>

#include <fzeta/digit_perm.hpp>

using namespace fzeta;

TEST(DigitPerm, ActionOnIntegers)
{
    EXPECT_EQ(rho_star(DigitPerm::swap(1, 2), 3, 2), 5);
    EXPECT_EQ(rho_hat_star(DigitPerm::swap(0, 1), PAdic::from_int(2, 2)).to_int_checked(), 3);
    EXPECT_EQ(rho_star(DigitPerm{}, 12345, 3), 12345);
}

TEST(DigitPerm, RejectsNonBijections)
{
    EXPECT_THROW(DigitPerm({{0, 1}}), domain_error);
    EXPECT_THROW(DigitPerm({{0, 1}, {2, 1}}), domain_error);
    EXPECT_THROW(DigitPerm({{0, 1}, {0, 2}}), domain_error);
}

TEST(DigitPerm, CyclesRoundTrip)
{
    const DigitPerm r = DigitPerm::parse_cycles("(0 1 2)(4 5)");
    EXPECT_EQ(r(0), 1u);
    EXPECT_EQ(r(2), 0u);
    EXPECT_EQ(r(5), 4u);
    EXPECT_EQ(r(9), 9u);
    EXPECT_EQ(DigitPerm::parse_cycles(r.to_cycles()), r);
    EXPECT_TRUE(r.compose(r.inverse()).is_identity());
}

TEST(DigitPerm, ActionPreservesDigitSumAndIsHomomorphic)
{
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        const std::uint32_t q = (it % 3 == 0) ? 3 : 2;
        const DigitPerm a = random_digit_perm(rng, 8), b = random_digit_perm(rng, 8);
        const long long n = static_cast<long long>(rng() % 6000);
        const long long an = rho_star(a, n, q);
        EXPECT_EQ(digit_sum(an, q), digit_sum(n, q));
        EXPECT_EQ(rho_star(a.compose(b), n, q), rho_star(a, rho_star(b, n, q), q));
        // The hatted action fixes 0 and agrees on -x with the plain one.
        const PAdic x = PAdic::from_int(q, -n);
        EXPECT_EQ(rho_hat_star(a, -x), -rho_star(a, x));
    }
}

TEST(DigitPerm, OrbitsAndCollapse)
{
    EXPECT_TRUE(same_orbit(PAdic::from_int(2, 3), PAdic::from_int(2, 5)));
    EXPECT_FALSE(same_orbit(PAdic::from_int(2, 3), PAdic::from_int(2, 7)));
    const auto w = orbit_witness(PAdic::from_int(3, 7), PAdic::from_int(3, 19));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(rho_star(*w, 7, 3), 19);
    EXPECT_EQ(collapse(PAdic::from_int(2, 0b101000)).to_int_checked(), 3);
    EXPECT_THROW(collapse(PAdic::from_int(2, -1)), domain_error);
    const auto members = orbit_members(3, 2, 40);
    EXPECT_EQ(members, (std::vector<long long>{3, 5, 6, 9, 10, 12, 17, 18, 20, 24, 33, 34, 36}));
}
