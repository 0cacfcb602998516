#include <gtest/gtest.h>

#include <random>

#include <fzeta/bigrat.hpp>
#include <fzeta/measures.hpp>

using namespace fzeta;

namespace
{

DividedPowerSeries z(const Fq &f, std::uint64_t i, std::uint64_t M = 64)
{
    return DividedPowerSeries::basis(f, i, M);
}

// Integer binomial, reduced mod p.
std::uint32_t binom_int_mod(unsigned n, unsigned k, unsigned p)
{
    return static_cast<std::uint32_t>(binomial(n, k) % p);
}

} // namespace

TEST(DividedPowers, ProductExamples)
{
    const Fq &f2 = Fq::get(2), &f3 = Fq::get(3);
    EXPECT_TRUE((z(f2, 1) * z(f2, 1)).terms().empty());
    EXPECT_TRUE((z(f3, 1) * z(f3, 2)).terms().empty());
    EXPECT_TRUE((z(f2, 1) * z(f2, 3)).terms().empty());
    EXPECT_EQ(z(f2, 1) * z(f2, 2), z(f2, 3));
}

TEST(DividedPowers, ProductMatchesIntegerBinomial)
{
    for (unsigned p : {2u, 3u, 5u}) {
        const Fq &f = Fq::get(p);
        for (unsigned i = 0; i < 30; ++i) {
            for (unsigned j = 0; j < 30; ++j) {
                EXPECT_EQ((z(f, i) * z(f, j)).coeff(i + j), binom_int_mod(i + j, i, p));
            }
        }
    }
}

TEST(DividedPowers, CommutativeAssociative)
{
    std::mt19937_64 rng(5);
    const Fq &f = Fq::get(3);
    for (int t = 0; t < 100; ++t) {
        auto a = random_dps(f, 81, rng), b = random_dps(f, 81, rng), c = random_dps(f, 81, rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(DividedPowers, TruncatesAtWindow)
{
    const Fq &f = Fq::get(2);
    EXPECT_EQ(z(f, 2, 7) * z(f, 4, 7), z(f, 6, 7));
    EXPECT_TRUE((z(f, 2, 6) * z(f, 4, 6)).terms().empty());
}

TEST(Automorphism, IdentityAndSwapExample)
{
    const Fq &f = Fq::get(2);
    const auto a = z(f, 1, 8) + z(f, 6, 8);
    EXPECT_EQ(dps_automorphism(DigitPerm(), a), a);
    const DigitPerm s = DigitPerm::swap(0, 1);
    const auto fz = z(f, 1, 8), gz = z(f, 2, 8);
    EXPECT_EQ(fz * gz, z(f, 3, 8));
    EXPECT_EQ(dps_automorphism(s, fz * gz), z(f, 3, 8));
    EXPECT_EQ(dps_automorphism(s, fz * gz), dps_automorphism(s, fz) * dps_automorphism(s, gz));
}

TEST(Automorphism, WindowOverflowNamesRequiredWindow)
{
    const Fq &f = Fq::get(2);
    try {
        dps_automorphism(DigitPerm::swap(0, 4), z(f, 1, 8));
        FAIL();
    } catch (const domain_error &e) {
        EXPECT_NE(std::string(e.what()).find("M = 32"), std::string::npos) << e.what();
    }
    EXPECT_THROW(dps_automorphism(DigitPerm(), z(f, 1, 10)), domain_error);
}

TEST(Automorphism, HomomorphismOnRandomPairs)
{
    std::mt19937_64 rng(11);
    for (unsigned p : {2u, 3u}) {
        const Fq &f = Fq::get(p);
        const unsigned k = p == 2 ? 7 : 5;
        const std::uint64_t M = ipow(p, k);
        for (int t = 0; t < 200; ++t) {
            const auto s = random_digit_perm(rng, k);
            auto a = random_dps(f, M, rng), b = random_dps(f, M, rng);
            EXPECT_EQ(dps_automorphism(s, a * b), dps_automorphism(s, a) * dps_automorphism(s, b));
        }
    }
}

TEST(Automorphism, BinomialAndCarrySymmetry)
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 500; ++t) {
        const std::uint32_t p = (t % 2 == 0) ? 3 : 5;
        const auto s = random_digit_perm(rng, 6);
        std::vector<std::uint32_t> d(8);
        for (auto &x : d) {
            x = static_cast<std::uint32_t>(rng() % p);
        }
        const PAdic y(p, d, (t % 3 == 0) ? p - 1 : 0);
        const std::uint64_t M = ipow(p, 6);
        EXPECT_TRUE(binom_invariant(s, y, rng() % M));
        EXPECT_TRUE(carry_invariant(s, rng() % M, rng() % M, p));
    }
}

TEST(Automorphism, SelfTestPasses)
{
    const auto r = measures_selftest(3, 500, 243, 1);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.multiplicative, 500u);
    EXPECT_TRUE(measures_selftest(2, 200, 128, 2).ok());
    EXPECT_THROW(measures_selftest(3, 1, 100, 0), domain_error);
}
