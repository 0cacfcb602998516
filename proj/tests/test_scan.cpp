#include <gtest/gtest.h>

#include <fzeta/scan.hpp>

using namespace fzeta;

TEST(EllipticScan, KernelMatchesEnumeration)
{
    const Elliptic2Ring ring;
    const auto fast = elliptic_special_polys(40);
    ASSERT_EQ(fast.size(), 40u);
    for (std::uint64_t j = 1; j <= 40; ++j) {
        const auto slow = special_poly(ring, j);
        const auto &sp = fast[j - 1];
        EXPECT_EQ(sp.j, j);
        EXPECT_EQ(sp.coeffs, slow.coeffs) << j;
        EXPECT_EQ(sp.cutoff, slow.cutoff) << j;
    }
}

TEST(EllipticScan, OrbitsConsistentUpTo128)
{
    const auto s = orbit_scan_elliptic(128);
    EXPECT_EQ(s.rows.size(), 128u);
    EXPECT_TRUE(s.all_consistent());
    for (const auto &r : s.rows) {
        EXPECT_EQ(r.orbit, digit_orbit_id(r.j, 2));
        EXPECT_GE(r.order, 1u);
    }
}

TEST(EllipticScan, DigitSumFilter)
{
    const auto s = orbit_scan_elliptic(64, 2);
    EXPECT_EQ(s.rows.size(), 15u);
    for (const auto &r : s.rows) {
        EXPECT_EQ(r.ell, 2u);
    }
}

TEST(PolyScan, AllRegularOverF2)
{
    const auto s = orbit_scan_poly(2, 128);
    EXPECT_EQ(s.rows.size(), 128u);
    EXPECT_TRUE(s.all_regular());
    EXPECT_TRUE(s.all_consistent());
    for (const auto &r : s.rows) {
        EXPECT_EQ(r.order, 1u) << r.j;
    }
}

TEST(PolyScan, OnlyMultiplesOfQMinusOne)
{
    const auto s = orbit_scan_poly(3, 60);
    EXPECT_EQ(s.rows.size(), 30u);
    for (const auto &r : s.rows) {
        EXPECT_EQ(r.j % 2, 0u);
    }
    EXPECT_TRUE(s.all_regular());
}

TEST(OrbitId, SortedNonzeroDigits)
{
    EXPECT_EQ(digit_orbit_id(13, 3), "{1,1,1}");
    EXPECT_EQ(digit_orbit_id(14, 3), "{1,1,2}");
    EXPECT_EQ(digit_orbit_id(0, 3), "{}");
}
