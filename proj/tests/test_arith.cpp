#include <gtest/gtest.h>

#include <fzeta/arith.hpp>
#include <fzeta/bigrat.hpp>

using namespace fzeta;

TEST(Arith, PrimePowerDetection)
{
    EXPECT_EQ(prime_power(8), std::make_optional(std::make_pair(2u, 3u)));
    EXPECT_EQ(prime_power(97), std::make_optional(std::make_pair(97u, 1u)));
    EXPECT_FALSE(prime_power(12));
    EXPECT_FALSE(prime_power(1));
}

TEST(Arith, DigitsAndSums)
{
    EXPECT_EQ(digits_of(11, 3), (std::vector<std::uint32_t>{2, 0, 1}));
    EXPECT_EQ(digit_sum(255, 2), 8u);
    EXPECT_EQ(digit_sum(0, 5), 0u);
}

TEST(Arith, LucasMatchesExactBinomial)
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (unsigned n = 0; n < 60; ++n) {
            for (unsigned k = 0; k <= n; ++k) {
                const BigInt exact = binomial(n, k) % p;
                EXPECT_EQ(binom_mod_p(n, k, p), static_cast<std::uint32_t>(exact)) << n << " " << k;
            }
        }
    }
}

TEST(Arith, CarryFreeIsBinomialNonvanishing)
{
    for (unsigned a = 0; a < 40; ++a) {
        for (unsigned c = 0; c < 40; ++c) {
            EXPECT_EQ(carry_free(a, c, 3), binom_mod_p(a + c, a, 3) != 0);
        }
    }
}

TEST(BigRat, Valuations)
{
    EXPECT_EQ(valuation_p(BigRat(BigInt(50), BigInt(3)), 5), 2);
    EXPECT_EQ(valuation_p(BigRat(BigInt(1), BigInt(9)), 3), -2);
    EXPECT_EQ(factorial(10), BigInt(3628800));
    EXPECT_THROW(valuation_p(BigInt(0), 2), domain_error);
}
