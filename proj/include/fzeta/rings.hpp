#ifndef FZETA_RINGS_HPP
#define FZETA_RINGS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <fzeta/arith.hpp>
#include <fzeta/error.hpp>
#include <fzeta/fq.hpp>
#include <fzeta/poly.hpp>

namespace fzeta
{

/// Polynomial over F_2, one bit per coefficient.
class F2Poly
{
public:
    F2Poly() = default;
    explicit F2Poly(std::uint64_t bits) : w_{bits}
    {
        trim();
    }

    static F2Poly monomial(std::size_t k)
    {
        F2Poly r;
        r.w_.assign(k / 64 + 1, 0);
        r.w_[k / 64] = std::uint64_t{1} << (k % 64);
        return r;
    }

    static F2Poly from_poly(const Poly &a)
    {
        if (a.field().q() != 2) {
            throw domain_error("F2Poly needs coefficients in F_2");
        }
        F2Poly r;
        r.w_.assign(a.coeffs().size() / 64 + 1, 0);
        for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
            if (a.coeffs()[i] != 0) {
                r.w_[i / 64] |= std::uint64_t{1} << (i % 64);
            }
        }
        r.trim();
        return r;
    }

    Poly to_poly() const
    {
        const Fq &f = Fq::get(2);
        std::vector<Fq::elem> c(static_cast<std::size_t>(deg() + 1));
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = bit(i) ? 1 : 0;
        }
        return Poly(f, std::move(c));
    }

    bool is_zero() const noexcept
    {
        return w_.empty();
    }
    long deg() const noexcept
    {
        if (w_.empty()) {
            return -1;
        }
        return static_cast<long>(64 * (w_.size() - 1)) + 63 - std::countl_zero(w_.back());
    }
    bool bit(std::size_t i) const noexcept
    {
        return i / 64 < w_.size() && ((w_[i / 64] >> (i % 64)) & 1) != 0;
    }
    const std::vector<std::uint64_t> &words() const noexcept
    {
        return w_;
    }

    F2Poly &operator+=(const F2Poly &b)
    {
        if (b.w_.size() > w_.size()) {
            w_.resize(b.w_.size(), 0);
        }
        for (std::size_t i = 0; i < b.w_.size(); ++i) {
            w_[i] ^= b.w_[i];
        }
        trim();
        return *this;
    }
    friend F2Poly operator+(F2Poly a, const F2Poly &b)
    {
        a += b;
        return a;
    }

    /// this += a * x^s.
    void add_shifted(const F2Poly &a, std::size_t s)
    {
        if (a.is_zero()) {
            return;
        }
        const std::size_t ws = s / 64;
        const unsigned bs = s % 64;
        const std::size_t need = a.w_.size() + ws + 1;
        if (w_.size() < need) {
            w_.resize(need, 0);
        }
        if (bs == 0) {
            for (std::size_t i = 0; i < a.w_.size(); ++i) {
                w_[i + ws] ^= a.w_[i];
            }
        } else {
            for (std::size_t i = 0; i < a.w_.size(); ++i) {
                w_[i + ws] ^= a.w_[i] << bs;
                w_[i + ws + 1] ^= a.w_[i] >> (64 - bs);
            }
        }
        trim();
    }

    friend F2Poly operator*(const F2Poly &a, const F2Poly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        // Shift-and-add over the sparser factor.
        const F2Poly &small = a.popcount() <= b.popcount() ? a : b;
        const F2Poly &big = &small == &a ? b : a;
        F2Poly r;
        r.w_.reserve(a.w_.size() + b.w_.size() + 1);
        for (std::size_t wi = 0; wi < small.w_.size(); ++wi) {
            std::uint64_t word = small.w_[wi];
            while (word != 0) {
                const unsigned t = static_cast<unsigned>(std::countr_zero(word));
                word &= word - 1;
                r.add_shifted(big, 64 * wi + t);
            }
        }
        return r;
    }
    F2Poly &operator*=(const F2Poly &b)
    {
        *this = *this * b;
        return *this;
    }

    /// a^2, which in characteristic 2 spreads the bits.
    F2Poly square() const
    {
        F2Poly r;
        r.w_.assign(2 * w_.size(), 0);
        for (std::size_t i = 0; i < w_.size(); ++i) {
            r.w_[2 * i] = spread(static_cast<std::uint32_t>(w_[i]));
            r.w_[2 * i + 1] = spread(static_cast<std::uint32_t>(w_[i] >> 32));
        }
        r.trim();
        return r;
    }

    std::size_t popcount() const noexcept
    {
        std::size_t n = 0;
        for (auto w : w_) {
            n += static_cast<std::size_t>(std::popcount(w));
        }
        return n;
    }

    friend bool operator==(const F2Poly &a, const F2Poly &b) noexcept
    {
        return a.w_ == b.w_;
    }

    std::string to_string(const std::string &var = "x") const
    {
        return to_poly().to_string(var);
    }

private:
    static std::uint64_t spread(std::uint32_t v) noexcept
    {
        std::uint64_t x = v;
        x = (x | (x << 16)) & 0x0000FFFF0000FFFFULL;
        x = (x | (x << 8)) & 0x00FF00FF00FF00FFULL;
        x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0FULL;
        x = (x | (x << 2)) & 0x3333333333333333ULL;
        x = (x | (x << 1)) & 0x5555555555555555ULL;
        return x;
    }
    void trim() noexcept
    {
        while (!w_.empty() && w_.back() == 0) {
            w_.pop_back();
        }
    }

    std::vector<std::uint64_t> w_;
};

/// u(x) + v(x) y in F_2[x, y] / (y^2 + y - x^3 - x - 1).
class Elliptic2Elem
{
public:
    Elliptic2Elem() = default;
    Elliptic2Elem(F2Poly u, F2Poly v) : u_(std::move(u)), v_(std::move(v)) {}

    static Elliptic2Elem one()
    {
        return {F2Poly(1), {}};
    }
    static Elliptic2Elem x()
    {
        return {F2Poly(2), {}};
    }
    static Elliptic2Elem y()
    {
        return {{}, F2Poly(1)};
    }
    /// x^3 + x + 1, the value of y^2 + y.
    static const F2Poly &curve_rhs()
    {
        static const F2Poly c(0b1011);
        return c;
    }

    const F2Poly &u() const noexcept
    {
        return u_;
    }
    const F2Poly &v() const noexcept
    {
        return v_;
    }
    bool is_zero() const noexcept
    {
        return u_.is_zero() && v_.is_zero();
    }
    bool is_one() const noexcept
    {
        return v_.is_zero() && u_ == F2Poly(1);
    }

    /// Pole order at infinity, -1 for zero: max(2 deg u, 2 deg v + 3), never a tie.
    long deg() const noexcept
    {
        const long du = u_.is_zero() ? -1 : 2 * u_.deg();
        const long dv = v_.is_zero() ? -1 : 2 * v_.deg() + 3;
        return std::max(du, dv);
    }

    friend Elliptic2Elem operator+(const Elliptic2Elem &a, const Elliptic2Elem &b)
    {
        return {a.u_ + b.u_, a.v_ + b.v_};
    }
    Elliptic2Elem &operator+=(const Elliptic2Elem &b)
    {
        u_ += b.u_;
        v_ += b.v_;
        return *this;
    }
    friend Elliptic2Elem operator*(const Elliptic2Elem &a, const Elliptic2Elem &b)
    {
        // y^2 = y + c: (u1 + v1 y)(u2 + v2 y) = (u1u2 + v1v2 c) + (u1v2 + u2v1 + v1v2) y.
        const F2Poly uu = a.u_ * b.u_;
        const F2Poly vv = a.v_ * b.v_;
        F2Poly cross = (a.u_ + a.v_) * (b.u_ + b.v_);
        cross += uu; // cross = u1v2 + u2v1 + v1v2
        F2Poly u = uu;
        u += vv * curve_rhs();
        return {std::move(u), std::move(cross)};
    }
    Elliptic2Elem &operator*=(const Elliptic2Elem &b)
    {
        *this = *this * b;
        return *this;
    }
    /// (u + v y)^2 = u^2 + v^2 c + v^2 y.
    Elliptic2Elem square() const
    {
        const F2Poly v2 = v_.square();
        F2Poly u = u_.square();
        u += v2 * curve_rhs();
        return {std::move(u), v2};
    }

    friend bool operator==(const Elliptic2Elem &a, const Elliptic2Elem &b) noexcept
    {
        return a.u_ == b.u_ && a.v_ == b.v_;
    }

    std::string to_string() const
    {
        if (is_zero()) {
            return "0";
        }
        std::string s;
        if (!v_.is_zero()) {
            const std::string vs = v_.to_string("x");
            s = vs == "1" ? "y" : "(" + vs + ")y";
        }
        if (!u_.is_zero()) {
            s += (s.empty() ? "" : "+") + u_.to_string("x");
        }
        return s;
    }
    friend std::ostream &operator<<(std::ostream &os, const Elliptic2Elem &a)
    {
        return os << a.to_string();
    }

private:
    F2Poly u_;
    F2Poly v_;
};

// Coefficient traits for hasse_multiplicity() over the elliptic ring.
inline bool is_zero(const Elliptic2Elem &a) noexcept
{
    return a.is_zero();
}
inline Elliptic2Elem mul_int(const Elliptic2Elem &a, long long n)
{
    return (n % 2 != 0) ? a : Elliptic2Elem{};
}
inline std::uint32_t characteristic(const Elliptic2Elem &) noexcept
{
    return 2;
}
inline Elliptic2Elem one_like(const Elliptic2Elem &)
{
    return Elliptic2Elem::one();
}

/// F_q[T] with its monic (positive) elements.
struct PolyRing
{
    using Elem = Poly;

    explicit PolyRing(const Fq &f) : field(&f) {}
    explicit PolyRing(std::uint32_t q) : field(&Fq::get(q)) {}

    const Fq *field;

    std::string name() const
    {
        return "fqT";
    }
    std::uint32_t q() const noexcept
    {
        return field->q();
    }
    std::uint32_t p() const noexcept
    {
        return field->p();
    }
    Poly zero() const
    {
        return Poly(*field);
    }
    Poly one() const
    {
        return Poly::one(*field);
    }
    long deg(const Poly &a) const noexcept
    {
        return a.deg();
    }
    std::uint64_t count_monics(unsigned e) const
    {
        return ipow(field->q(), e);
    }
    /// Visits each monic of degree e exactly once.
    template <class F>
    void for_each_monic(unsigned e, F &&fn) const
    {
        const std::uint64_t n = count_monics(e);
        for (std::uint64_t k = 0; k < n; ++k) {
            fn(monic_at(*field, e, k));
        }
    }
    Poly pow(const Poly &a, std::uint64_t j) const
    {
        return a.pow_digits(j);
    }
    std::string to_string(const Poly &a) const
    {
        return a.to_string("T");
    }
};

/// The coordinate ring of y^2 + y = x^3 + x + 1 over F_2. One point at
/// infinity, class number one and trivial units, so every nonzero element is
/// positive and pole orders run over {0, 2, 3, 4, ...}.
struct Elliptic2Ring
{
    using Elem = Elliptic2Elem;

    std::string name() const
    {
        return "elliptic2";
    }
    std::uint32_t q() const noexcept
    {
        return 2;
    }
    std::uint32_t p() const noexcept
    {
        return 2;
    }
    Elliptic2Elem zero() const
    {
        return {};
    }
    Elliptic2Elem one() const
    {
        return Elliptic2Elem::one();
    }
    long deg(const Elliptic2Elem &a) const noexcept
    {
        return a.deg();
    }
    /// The basis element of pole order n (n != 1): x^(n/2) or x^((n-3)/2) y.
    static Elliptic2Elem basis(unsigned n)
    {
        if (n == 1) {
            throw domain_error("no element has pole order 1");
        }
        if (n % 2 == 0) {
            return {F2Poly::monomial(n / 2), {}};
        }
        return {{}, F2Poly::monomial((n - 3) / 2)};
    }
    std::uint64_t count_monics(unsigned e) const noexcept
    {
        if (e == 0) {
            return 1;
        }
        if (e == 1) {
            return 0;
        }
        return std::uint64_t{1} << (e - 1);
    }
    /// The k-th element of degree e: leading basis element plus the basis
    /// elements of pole orders 0, 2, 3, ..., e-1 selected by the bits of k.
    static Elliptic2Elem monic_at(unsigned e, std::uint64_t k)
    {
        Elliptic2Elem a = basis(e);
        F2Poly u = a.u(), v = a.v();
        unsigned bit = 0;
        for (unsigned n = 0; n < e; ++n) {
            if (n == 1) {
                continue;
            }
            if ((k >> bit) & 1) {
                if (n % 2 == 0) {
                    u += F2Poly::monomial(n / 2);
                } else {
                    v += F2Poly::monomial((n - 3) / 2);
                }
            }
            ++bit;
        }
        return {std::move(u), std::move(v)};
    }
    template <class F>
    void for_each_monic(unsigned e, F &&fn) const
    {
        const std::uint64_t n = count_monics(e);
        for (std::uint64_t k = 0; k < n; ++k) {
            fn(monic_at(e, k));
        }
    }
    Elliptic2Elem pow(Elliptic2Elem a, std::uint64_t j) const
    {
        Elliptic2Elem r = Elliptic2Elem::one();
        while (j != 0) {
            if (j & 1) {
                r *= a;
            }
            j >>= 1;
            if (j != 0) {
                a = a.square();
            }
        }
        return r;
    }
    std::string to_string(const Elliptic2Elem &a) const
    {
        return a.to_string();
    }
};

template <class Ring>
std::vector<typename Ring::Elem> monics(const Ring &ring, unsigned e)
{
    std::vector<typename Ring::Elem> out;
    ring.for_each_monic(e, [&](typename Ring::Elem a) { out.push_back(std::move(a)); });
    return out;
}

template <class Ring>
typename Ring::Elem ring_pow(const Ring &ring, const typename Ring::Elem &a, std::uint64_t j)
{
    return ring.pow(a, j);
}

} // namespace fzeta

#endif
