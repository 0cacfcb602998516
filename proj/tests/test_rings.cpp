#include <gtest/gtest.h>

#include <random>

#include <fzeta/rings.hpp>

using namespace fzeta;

namespace
{

Elliptic2Elem random_elliptic(std::mt19937_64 &rng)
{
    const unsigned e = 2 + static_cast<unsigned>(rng() % 12);
    return Elliptic2Ring::monic_at(e, rng() % Elliptic2Ring{}.count_monics(e));
}

} // namespace

TEST(F2Poly, MatchesGenericPolynomials)
{
    const Fq &f = Fq::get(2);
    std::mt19937_64 rng(2);
    for (int it = 0; it < 200; ++it) {
        std::vector<Fq::elem> ac(1 + rng() % 150), bc(1 + rng() % 150);
        for (auto &c : ac) c = rng() & 1;
        for (auto &c : bc) c = rng() & 1;
        const Poly a(f, ac), b(f, bc);
        const F2Poly fa = F2Poly::from_poly(a), fb = F2Poly::from_poly(b);
        EXPECT_EQ((fa * fb).to_poly(), a * b);
        EXPECT_EQ((fa + fb).to_poly(), a + b);
        EXPECT_EQ(fa.square().to_poly(), a * a);
    }
}

TEST(PolyRing, MonicsOfDegreeOne)
{
    const PolyRing r(2);
    const auto m = monics(r, 1);
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(m[0].to_string(), "T");
    EXPECT_EQ(m[1].to_string(), "T+1");
    EXPECT_EQ(monics(r, 0).size(), 1u);
    EXPECT_EQ(monics(PolyRing(3), 4).size(), 81u);
}

TEST(Elliptic2, DefiningRelation)
{
    const Elliptic2Ring r;
    const Elliptic2Elem y = Elliptic2Elem::y();
    EXPECT_EQ(y * y, y + Elliptic2Elem(Elliptic2Elem::curve_rhs(), {}));
    EXPECT_EQ(y.square(), y * y);
    EXPECT_EQ(r.deg(ring_pow(r, y + Elliptic2Elem::x(), 4)), 12);
    EXPECT_EQ(r.deg(Elliptic2Elem{}), -1);
}

TEST(Elliptic2, MonicCountsAndDegrees)
{
    const Elliptic2Ring r;
    for (unsigned e = 0; e <= 14; ++e) {
        const auto m = monics(r, e);
        const std::size_t expected = e == 0 ? 1 : (e == 1 ? 0 : std::size_t{1} << (e - 1));
        ASSERT_EQ(m.size(), expected) << e;
        for (const auto &a : m) {
            EXPECT_EQ(r.deg(a), static_cast<long>(e));
        }
        if (e == 3) {
            std::vector<std::string> names;
            for (const auto &a : m) names.push_back(a.to_string());
            EXPECT_EQ(names, (std::vector<std::string>{"y", "y+1", "y+x", "y+x+1"}));
        }
    }
    // Elements of a fixed degree are distinct.
    const auto m = monics(r, 9);
    for (std::size_t a = 0; a < m.size(); ++a) {
        for (std::size_t b = a + 1; b < m.size(); ++b) {
            ASSERT_FALSE(m[a] == m[b]);
        }
    }
}

TEST(Elliptic2, RingAxiomsAndDegreeAdditivity)
{
    std::mt19937_64 rng(4);
    for (int it = 0; it < 500; ++it) {
        const Elliptic2Elem a = random_elliptic(rng), b = random_elliptic(rng), c = random_elliptic(rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b).deg(), a.deg() + b.deg());
    }
}

TEST(PolyRing, DegreeAdditivity)
{
    std::mt19937_64 rng(5);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const PolyRing r(q);
        for (int it = 0; it < 500; ++it) {
            const unsigned ea = rng() % 6, eb = rng() % 6;
            const Poly a = monic_at(*r.field, ea, rng() % r.count_monics(ea));
            const Poly b = monic_at(*r.field, eb, rng() % r.count_monics(eb));
            EXPECT_EQ(r.deg(a * b), r.deg(a) + r.deg(b));
        }
    }
}

TEST(Elliptic2, PowMatchesRepeatedProduct)
{
    const Elliptic2Ring r;
    const Elliptic2Elem a = Elliptic2Ring::monic_at(5, 11);
    Elliptic2Elem acc = Elliptic2Elem::one();
    for (unsigned j = 0; j < 20; ++j) {
        EXPECT_EQ(ring_pow(r, a, j), acc);
        acc *= a;
    }
}
