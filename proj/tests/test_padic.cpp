#include <gtest/gtest.h>

#include <random>

#include <fzeta/padic.hpp>

using namespace fzeta;

TEST(PAdic, IntegerRoundTrip)
{
    for (std::uint32_t q : {2u, 3u, 4u, 9u}) {
        for (long long n = -300; n <= 300; ++n) {
            const PAdic x = PAdic::from_int(q, n);
            EXPECT_EQ(x.to_int_checked(), n);
            EXPECT_EQ(x.is_nonnegative_integer(), n >= 0);
        }
    }
}

TEST(PAdic, NegativeHasConstantTail)
{
    const PAdic m1 = PAdic::from_int(3, -1);
    EXPECT_TRUE(m1.digits().empty());
    EXPECT_EQ(m1.tail(), 2u);
    const PAdic m5 = PAdic::from_int(2, -5); // ...11011
    EXPECT_EQ(m5.digit(0), 1u);
    EXPECT_EQ(m5.digit(1), 1u);
    EXPECT_EQ(m5.digit(2), 0u);
    EXPECT_EQ(m5.digit(40), 1u);
}

TEST(PAdic, RingOperationsMatchIntegers)
{
    std::mt19937_64 rng(3);
    for (int it = 0; it < 2000; ++it) {
        const std::uint32_t q = (it % 2) ? 5 : 4;
        const long long a = static_cast<long long>(rng() % 20001) - 10000;
        const long long b = static_cast<long long>(rng() % 20001) - 10000;
        const PAdic x = PAdic::from_int(q, a), y = PAdic::from_int(q, b);
        EXPECT_EQ((x + y).to_int_checked(), a + b);
        EXPECT_EQ((x - y).to_int_checked(), a - b);
        EXPECT_EQ((-x).to_int_checked(), -a);
    }
}

TEST(PAdic, NonIntegerNegationAndSum)
{
    // 1/2 in Z_3 is ...1112 (x + x = 1).
    const PAdic half(3, {2}, 1);
    EXPECT_FALSE(half.is_integer());
    EXPECT_EQ((half + half).to_int_checked(), 1);
    EXPECT_EQ((half + (-half)).to_int_checked(), 0);
}

TEST(PAdic, DigitSumAndBaseP)
{
    EXPECT_EQ(ell_q(PAdic::from_int(3, 11)), 3u);
    EXPECT_THROW(ell_q(PAdic::from_int(3, -11)), domain_error);
    const PAdic x = PAdic::from_int(4, 27); // 4-adic 3,2,1 -> base 2: 1,1,0,1,1
    EXPECT_EQ(x.to_base_p(), PAdic::from_int(2, 27));
    EXPECT_EQ(x.base_p_digit(2), 0u);
    EXPECT_EQ(x.base_p_digit(3), 1u);
}

TEST(PAdic, BinomialOfNegativeExponent)
{
    // C(-1, k) = (-1)^k.
    const PAdic m1 = PAdic::from_int(5, -1);
    for (unsigned k = 0; k < 30; ++k) {
        EXPECT_EQ(binom_padic(m1, k), (k % 2) ? 4u : 1u);
    }
}

TEST(PAdic, Errors)
{
    EXPECT_THROW(PAdic(6, {}, 0), domain_error);
    EXPECT_THROW(PAdic(3, {3}, 0), domain_error);
    EXPECT_THROW(PAdic::from_int(3, 1) + PAdic::from_int(5, 1), domain_error);
    EXPECT_THROW(PAdic(3, {2}, 1).to_int_checked(), domain_error);
}
