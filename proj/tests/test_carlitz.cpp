#include <gtest/gtest.h>

#include <fzeta/carlitz.hpp>
#include <fzeta/digit_perm.hpp>
#include <fzeta/rings.hpp>

using namespace fzeta;

TEST(Carlitz, BracketsAndProducts)
{
    const Fq &f2 = Fq::get(2);
    EXPECT_EQ(bracket(f2, 1).to_string(), "T^2+T");
    EXPECT_EQ(carlitz_D(f2, 2), Poly::parse(f2, "T^4+T") * Poly::parse(f2, "T^2+T").pow(2));
    for (std::uint32_t q : {2u, 3u}) {
        const Fq &f = Fq::get(q);
        for (unsigned i = 1; i <= 3; ++i) {
            Poly prod = Poly::one(f), l = Poly::one(f), brk = Poly::one(f);
            PolyRing(f).for_each_monic(i, [&](const Poly &g) { prod *= g; });
            for (unsigned d = 0; d <= i; ++d) {
                // lcm of all polynomials of degree i = lcm of the monics of degree <= i.
                PolyRing(f).for_each_monic(d, [&](const Poly &g) { l = lcm(l, g); });
            }
            for (unsigned d = 1; d <= i; ++d) {
                if (i % d == 0) {
                    for (const Poly &P : monic_irreducibles(f, d)) brk *= P;
                }
            }
            EXPECT_EQ(carlitz_D(f, i), prod) << q << " " << i;
            EXPECT_EQ(carlitz_L(f, i), l) << q << " " << i;
            EXPECT_EQ(bracket(f, i), brk) << q << " " << i;
        }
        Poly brk4 = Poly::one(f);
        for (unsigned d : {1u, 2u, 4u}) {
            for (const Poly &P : monic_irreducibles(f, d)) brk4 *= P;
        }
        EXPECT_EQ(bracket(f, 4), brk4);
    }
    EXPECT_THROW(bracket(f2, 0), domain_error);
}

TEST(Carlitz, FactorialValuationExamples)
{
    EXPECT_EQ(factorial_valuation(5, 1, 2), 3u);
    EXPECT_EQ(factorial_valuation_direct(Poly::T(Fq::get(2)), 5), 3u);
    EXPECT_EQ(factorial_valuation(9, 1, 3), 4u);
    EXPECT_EQ(factorial_valuation(8, 2, 3), 0u);
    EXPECT_EQ(carlitz_factorial(Fq::get(3), 9), carlitz_D(Fq::get(3), 2));
}

TEST(Carlitz, FactorialValuationMatchesDivision)
{
    for (std::uint32_t q : {2u, 3u}) {
        const Fq &f = Fq::get(q);
        for (unsigned d = 1; d <= 3; ++d) {
            const Poly P = monic_irreducibles(f, d).back();
            for (std::uint64_t j = 0; j <= 80; ++j) {
                EXPECT_EQ(factorial_valuation(j, d, q), factorial_valuation_direct(P, j)) << q << d << " " << j;
            }
        }
    }
}

TEST(Carlitz, ExpLogInverseAndIntegral)
{
    for (std::uint32_t q : {2u, 3u}) {
        const Fq &f = Fq::get(q);
        const auto s = carlitz_exp_log(f, 5);
        EXPECT_EQ(s.exp[1], RatFun(Poly::one(f), bracket(f, 1)));
        EXPECT_EQ(s.log[1], RatFun(Poly::one(f).mul_int(-1), bracket(f, 1)));
        const auto id = log_after_exp(s);
        EXPECT_EQ(id[0], RatFun(Poly::one(f)));
        for (unsigned i = 1; i <= 5; ++i) {
            EXPECT_TRUE(id[i].is_zero());
            EXPECT_TRUE((RatFun(carlitz_D(f, i)) * s.exp[i]).is_polynomial());
            const RatFun li = RatFun(carlitz_L(f, i)) * s.log[i];
            EXPECT_TRUE(li.is_polynomial());
            EXPECT_EQ(li, RatFun(Poly::one(f).mul_int(i % 2 ? -1 : 1)));
        }
    }
}

TEST(BernoulliCarlitz, SmallValues)
{
    const Fq &f3 = Fq::get(3);
    EXPECT_EQ(bc_number(f3, 0).value, RatFun(Poly::one(f3)));
    const BCNumber b2 = bc_number(f3, 2);
    EXPECT_EQ(b2.value, RatFun(Poly::constant(f3, 2), Poly::parse(f3, "T^3+2T")));
    EXPECT_EQ(b2.denominator, vsc_predict(2, 3));
    EXPECT_EQ(vsc_predict(3, 2).to_string(), "T^4+T");
    EXPECT_EQ(vsc_predict(5, 2).to_string(), "T^2+T");
    EXPECT_EQ(vsc_predict(2, 3).to_string(), "T^3+2T");
    for (std::uint64_t j = 1; j <= 20; ++j) {
        if (j % 2 != 0) {
            EXPECT_TRUE(bc_number(f3, j).value.is_zero());
        }
    }
}

TEST(BernoulliCarlitz, DenominatorTheorems)
{
    for (auto [q, jm] : {std::pair{3u, 60ull}, std::pair{2u, 60ull}, std::pair{4u, 45ull}}) {
        const VscTable t = vsc_verify(jm, q);
        for (const auto &r : t.rows) {
            EXPECT_TRUE(r.match) << "q=" << q << " j=" << r.j << " predicted " << r.predicted << " computed "
                                 << r.computed;
        }
        for (const auto &o : t.orbits) {
            EXPECT_TRUE(o.constant) << "q=" << q << " P=" << o.prime << " first member " << o.members.front();
        }
        EXPECT_FALSE(t.rows.empty());
    }
}
