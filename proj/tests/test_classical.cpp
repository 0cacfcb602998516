#include <gtest/gtest.h>

#include <fzeta/classical.hpp>

using namespace fzeta;

namespace
{

const BernoulliCache &cache()
{
    static const BernoulliCache B(200);
    return B;
}

// Akiyama-Tanigawa; yields B_1 = +1/2, the even-index values agree.
std::vector<BigRat> bernoulli_at(unsigned nmax)
{
    std::vector<BigRat> a(nmax + 1), out;
    for (unsigned m = 0; m <= nmax; ++m) {
        a[m] = BigRat(1, m + 1);
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = BigRat(j) * (a[j - 1] - a[j]);
        }
        out.push_back(a[0]);
    }
    return out;
}

} // namespace

TEST(Bernoulli, KnownValues)
{
    const auto &B = cache();
    EXPECT_EQ(B(0), BigRat(1));
    EXPECT_EQ(B(1), BigRat(-1, 2));
    EXPECT_EQ(B(2), BigRat(1, 6));
    EXPECT_EQ(B(10), BigRat(5, 66));
    EXPECT_EQ(B(12), BigRat(-691, 2730));
    EXPECT_EQ(B(13), BigRat(0));
}

TEST(Bernoulli, MatchesAkiyamaTanigawa)
{
    const auto &B = cache();
    const auto oracle = bernoulli_at(120);
    for (unsigned n = 2; n <= 120; ++n) {
        EXPECT_EQ(B(n), oracle[n]) << n;
    }
}

TEST(Bernoulli, BeyondCacheThrows)
{
    EXPECT_THROW(cache()(201), domain_error);
}

TEST(VonStaudtClausen, DenominatorsUpTo200)
{
    const auto &B = cache();
    EXPECT_EQ(vsc_classical(12), BigInt(2730));
    for (unsigned n = 2; n <= 200; n += 2) {
        EXPECT_EQ(BigInt(denominator(B(n))), vsc_classical(n)) << n;
    }
    EXPECT_THROW(vsc_classical(3), domain_error);
}

TEST(Adams, HoldsUpTo200)
{
    const auto &B = cache();
    EXPECT_TRUE(adams_check(B, 10, 5));
    for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
        for (unsigned n = 2; n <= 200; n += 2) {
            if (n % (p - 1) != 0) {
                EXPECT_TRUE(adams_check(B, n, p)) << n << " " << p;
            }
        }
    }
    EXPECT_THROW(adams_check(B, 4, 3), domain_error);
}

TEST(Kummer, HoldsOnAllAdmissiblePairs)
{
    const auto &B = cache();
    EXPECT_TRUE(kummer_check(B, 2, 6, 5, 1));
    unsigned checked = 0;
    for (unsigned p : {3u, 5u, 7u, 11u}) {
        for (unsigned b = 1; b <= 2; ++b) {
            const unsigned mod = (b == 1 ? 1 : p) * (p - 1);
            for (unsigned i = 2; i <= 120; i += 2) {
                if (i % (p - 1) == 0) {
                    continue;
                }
                for (unsigned j = i; j <= 120; j += mod) {
                    EXPECT_TRUE(kummer_check(B, i, j, p, b)) << i << " " << j << " " << p << " " << b;
                    ++checked;
                }
            }
        }
    }
    EXPECT_GT(checked, 500u);
    EXPECT_THROW(kummer_check(B, 2, 4, 3, 1), domain_error);
    EXPECT_THROW(kummer_check(B, 2, 4, 5, 1), domain_error);
}

TEST(Stability, ExampleWindow)
{
    const auto r = stability_check(cache(), 2, 5);
    EXPECT_EQ(r.t, 1);
    EXPECT_EQ(r.modulus, 20u);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.window.front(), 22u);
}

TEST(Stability, HoldsForSmallN)
{
    for (unsigned p : {3u, 5u, 7u}) {
        for (unsigned n = 2; n <= 60; n += 2) {
            const auto r = stability_check(cache(), n, p);
            EXPECT_TRUE(r.ok()) << n << " " << p;
        }
    }
}

TEST(Stability, WeakerCongruenceFails)
{
    // 10 == 2 mod 4 but not mod 20.
    EXPECT_TRUE(valuations_differ(cache(), 2, 10, 5));
    EXPECT_NE(10u % 20u, 2u % 20u);
}

TEST(EulerRatio, ClosedFormForEvenN)
{
    const auto &B = cache();
    EXPECT_EQ(euler_ratio_coefficient(B, 2), BigRat(3));
    for (unsigned n = 2; n <= 100; ++n) {
        EXPECT_TRUE(euler_ratio_check(B, n)) << n;
    }
}
