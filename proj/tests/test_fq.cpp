#include <gtest/gtest.h>

#include <sstream>

#include <fzeta/fq.hpp>

using namespace fzeta;

TEST(Fq, QuadraticExtensionOfF2)
{
    const Fq &f = Fq::get(4);
    EXPECT_EQ(f.p(), 2u);
    EXPECT_EQ(f.n0(), 2u);
    const FqElem x(f, 2); // the class of x
    EXPECT_EQ((x * x).code(), 3u); // x^2 = x + 1
    EXPECT_EQ((x * x).to_string(), "(x+1)");
    EXPECT_EQ(x.pow(3).code(), 1u);
}

TEST(Fq, FieldAxiomsExhaustive)
{
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
        const Fq &f = Fq::get(q);
        for (Fq::elem a = 0; a < q; ++a) {
            EXPECT_EQ(f.add(a, f.neg(a)), 0u);
            EXPECT_EQ(f.pow(a, q), a) << "q=" << q;
            if (a != 0) {
                EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
            }
            for (Fq::elem b = 0; b < q; ++b) {
                EXPECT_EQ(f.add(a, b), f.add(b, a));
                EXPECT_EQ(f.mul(a, b), f.mul(b, a));
                for (Fq::elem c = 0; c < q; c += 3) {
                    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST(Fq, FrobeniusIsAdditive)
{
    const Fq &f = Fq::get(27);
    for (Fq::elem a = 0; a < 27; ++a) {
        for (Fq::elem b = 0; b < 27; ++b) {
            EXPECT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
        }
    }
}

TEST(Fq, InterningAndErrors)
{
    EXPECT_EQ(&Fq::get(9), &Fq::get(9));
    EXPECT_THROW(Fq::get(6), domain_error);
    EXPECT_THROW(Fq::get(2, {1, 0, 1}), domain_error); // x^2+1 = (x+1)^2 over F_2
    EXPECT_THROW(Fq::get(5).inv(0), domain_error);
    EXPECT_THROW(FqElem(Fq::get(3), 1) + FqElem(Fq::get(5), 1), domain_error);
}

TEST(Fq, DigitsRoundTrip)
{
    const Fq &f = Fq::get(25);
    for (Fq::elem a = 0; a < 25; ++a) {
        EXPECT_EQ(f.from_digits(f.digits(a)), a);
    }
    EXPECT_EQ(f.from_int(-1), 4u);
}
