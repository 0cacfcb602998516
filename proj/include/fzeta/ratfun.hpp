#ifndef FZETA_RATFUN_HPP
#define FZETA_RATFUN_HPP

#include <ostream>
#include <string>
#include <utility>

#include <fzeta/error.hpp>
#include <fzeta/poly.hpp>

namespace fzeta
{

/// Element of F_q(T) kept reduced with a monic denominator.
class RatFun
{
public:
    explicit RatFun(const Fq &f) : num_(f), den_(Poly::one(f)) {}
    RatFun(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) {
            throw domain_error("rational function with zero denominator");
        }
        normalize();
    }

    const Poly &num() const noexcept
    {
        return num_;
    }
    const Poly &den() const noexcept
    {
        return den_;
    }
    const Fq &field() const noexcept
    {
        return num_.field();
    }
    bool is_zero() const noexcept
    {
        return num_.is_zero();
    }
    bool is_polynomial() const noexcept
    {
        return den_.is_one();
    }

    friend RatFun operator+(const RatFun &a, const RatFun &b)
    {
        if (a.den_ == b.den_) {
            return RatFun(a.num_ + b.num_, a.den_);
        }
        const Poly g = gcd(a.den_, b.den_);
        const Poly ad = a.den_ / g;
        const Poly bd = b.den_ / g;
        return RatFun(a.num_ * bd + b.num_ * ad, ad * b.den_);
    }
    RatFun operator-() const
    {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator-(const RatFun &a, const RatFun &b)
    {
        return a + (-b);
    }
    friend RatFun operator*(const RatFun &a, const RatFun &b)
    {
        // Cross-cancel first so the products stay small.
        const Poly g1 = gcd(a.num_, b.den_);
        const Poly g2 = gcd(b.num_, a.den_);
        if (a.is_zero() || b.is_zero()) {
            return RatFun(a.field());
        }
        return RatFun((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
    }
    RatFun inv() const
    {
        if (is_zero()) {
            throw domain_error("inverse of zero rational function");
        }
        return RatFun(den_, num_);
    }
    friend RatFun operator/(const RatFun &a, const RatFun &b)
    {
        return a * b.inv();
    }
    friend bool operator==(const RatFun &a, const RatFun &b) noexcept
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// r^(q^k) = r(T^(q^k)) over F_q.
    RatFun frobenius_q(unsigned k) const
    {
        RatFun r = *this;
        r.num_ = num_.frobenius_q(k);
        r.den_ = den_.frobenius_q(k);
        return r;
    }

    std::string to_string() const
    {
        if (den_.is_one()) {
            return num_.to_string();
        }
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }
    friend std::ostream &operator<<(std::ostream &os, const RatFun &r)
    {
        return os << r.to_string();
    }

private:
    void normalize()
    {
        if (num_.is_zero()) {
            den_ = Poly::one(num_.field());
            return;
        }
        const Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const auto lc = den_.lead();
        if (lc != 1) {
            const auto il = den_.field().inv(lc);
            num_ = num_.scale(il);
            den_ = den_.scale(il);
        }
    }

    Poly num_;
    Poly den_;
};

} // namespace fzeta

#endif
