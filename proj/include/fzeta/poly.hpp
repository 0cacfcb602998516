#ifndef FZETA_POLY_HPP
#define FZETA_POLY_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <fzeta/arith.hpp>
#include <fzeta/error.hpp>
#include <fzeta/fq.hpp>

namespace fzeta
{

/// Dense polynomial in T over F_q, coefficients low-to-high with no trailing zeros.
class Poly
{
public:
    using elem = Fq::elem;

    explicit Poly(const Fq &f) : field_(&f) {}
    Poly(const Fq &f, std::vector<elem> coeffs) : field_(&f), c_(std::move(coeffs))
    {
        trim();
    }

    static Poly constant(const Fq &f, elem c)
    {
        return Poly(f, std::vector<elem>{c});
    }
    static Poly one(const Fq &f)
    {
        return constant(f, 1);
    }
    static Poly monomial(const Fq &f, elem c, std::size_t k)
    {
        std::vector<elem> v(k + 1, 0);
        v[k] = c;
        return Poly(f, std::move(v));
    }
    /// The variable T.
    static Poly T(const Fq &f)
    {
        return monomial(f, 1, 1);
    }

    const Fq &field() const noexcept
    {
        return *field_;
    }
    const std::vector<elem> &coeffs() const noexcept
    {
        return c_;
    }
    bool is_zero() const noexcept
    {
        return c_.empty();
    }
    /// Degree; -1 for the zero polynomial.
    long deg() const noexcept
    {
        return static_cast<long>(c_.size()) - 1;
    }
    elem coeff(std::size_t i) const noexcept
    {
        return i < c_.size() ? c_[i] : 0;
    }
    elem lead() const noexcept
    {
        return c_.empty() ? 0 : c_.back();
    }
    bool is_monic() const noexcept
    {
        return !c_.empty() && c_.back() == 1;
    }
    bool is_one() const noexcept
    {
        return c_.size() == 1 && c_[0] == 1;
    }
    /// Lowest exponent carrying a nonzero coefficient (ord_T); -1 for zero.
    long low_deg() const noexcept
    {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] != 0) {
                return static_cast<long>(i);
            }
        }
        return -1;
    }

    friend Poly operator+(const Poly &a, const Poly &b)
    {
        a.check(b);
        const Fq &f = *a.field_;
        const auto &big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
        const auto &small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
        std::vector<elem> r(big);
        for (std::size_t i = 0; i < small.size(); ++i) {
            r[i] = f.add(r[i], small[i]);
        }
        return Poly(f, std::move(r));
    }
    Poly operator-() const
    {
        std::vector<elem> r(c_);
        for (auto &x : r) {
            x = field_->neg(x);
        }
        return Poly(*field_, std::move(r));
    }
    friend Poly operator-(const Poly &a, const Poly &b)
    {
        return a + (-b);
    }
    Poly &operator+=(const Poly &b)
    {
        check(b);
        if (c_.size() < b.c_.size()) {
            c_.resize(b.c_.size(), 0);
        }
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            c_[i] = field_->add(c_[i], b.c_[i]);
        }
        trim();
        return *this;
    }

    friend Poly operator*(const Poly &a, const Poly &b)
    {
        a.check(b);
        if (a.is_zero() || b.is_zero()) {
            return Poly(*a.field_);
        }
        const Fq &f = *a.field_;
        std::vector<elem> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            const elem ai = a.c_[i];
            if (ai == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                const elem bj = b.c_[j];
                if (bj != 0) {
                    r[i + j] = f.add(r[i + j], f.mul(ai, bj));
                }
            }
        }
        return Poly(f, std::move(r));
    }
    Poly &operator*=(const Poly &b)
    {
        *this = *this * b;
        return *this;
    }

    Poly scale(elem s) const
    {
        if (s == 0) {
            return Poly(*field_);
        }
        std::vector<elem> r(c_);
        for (auto &x : r) {
            x = field_->mul(x, s);
        }
        return Poly(*field_, std::move(r));
    }
    Poly mul_int(long long n) const
    {
        return scale(field_->from_int(n));
    }
    /// Multiplication by T^k.
    Poly shift(std::size_t k) const
    {
        if (is_zero()) {
            return *this;
        }
        std::vector<elem> r(k, 0);
        r.insert(r.end(), c_.begin(), c_.end());
        return Poly(*field_, std::move(r));
    }

    friend bool operator==(const Poly &a, const Poly &b) noexcept
    {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly &a, const Poly &b) noexcept
    {
        return !(a == b);
    }

    /// Quotient and remainder: *this = quot * g + rem with deg rem < deg g.
    std::pair<Poly, Poly> divrem(const Poly &g) const
    {
        check(g);
        if (g.is_zero()) {
            throw domain_error("polynomial division by zero");
        }
        const Fq &f = *field_;
        if (deg() < g.deg()) {
            return {Poly(f), *this};
        }
        std::vector<elem> r(c_);
        std::vector<elem> quot(c_.size() - g.c_.size() + 1, 0);
        const elem inv_lead = f.inv(g.lead());
        const std::size_t dg = g.c_.size() - 1;
        for (std::size_t k = r.size(); k-- > dg;) {
            const elem c = r[k];
            if (c == 0) {
                continue;
            }
            const elem m = f.mul(c, inv_lead);
            quot[k - dg] = m;
            const elem nm = f.neg(m);
            for (std::size_t i = 0; i <= dg; ++i) {
                if (g.c_[i] != 0) {
                    r[k - dg + i] = f.add(r[k - dg + i], f.mul(nm, g.c_[i]));
                }
            }
        }
        r.resize(dg);
        return {Poly(f, std::move(quot)), Poly(f, std::move(r))};
    }
    Poly operator/(const Poly &g) const
    {
        return divrem(g).first;
    }
    Poly operator%(const Poly &g) const
    {
        return divrem(g).second;
    }
    bool divides(const Poly &a) const
    {
        return (a % *this).is_zero();
    }

    Poly monic() const
    {
        if (is_zero()) {
            return *this;
        }
        return scale(field_->inv(lead()));
    }

    elem eval(elem x) const noexcept
    {
        elem acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = field_->add(field_->mul(acc, x), c_[i]);
        }
        return acc;
    }
    FqElem eval(const FqElem &x) const
    {
        if (&x.field() != field_) {
            throw domain_error("evaluation point lies in a different field");
        }
        return FqElem(*field_, eval(x.code()));
    }

    /// f(T^m).
    Poly substitute_power(std::uint64_t m) const
    {
        if (is_zero() || m == 1) {
            return *this;
        }
        std::vector<elem> r(static_cast<std::size_t>(deg()) * m + 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r[i * m] = c_[i];
        }
        return Poly(*field_, std::move(r));
    }

    /// f^(q^k) = f(T^(q^k)) over F_q.
    Poly frobenius_q(unsigned k) const
    {
        return substitute_power(ipow(field_->q(), k));
    }

    Poly pow(std::uint64_t n) const
    {
        Poly r = one(*field_);
        Poly b = *this;
        while (n != 0) {
            if (n & 1u) {
                r *= b;
            }
            n >>= 1;
            if (n != 0) {
                b *= b;
            }
        }
        return r;
    }

    /// f^j assembled from the base-q digits c_k of j as prod_k f(T^(q^k))^(c_k).
    Poly pow_digits(std::uint64_t j) const
    {
        Poly r = one(*field_);
        const std::uint64_t q = field_->q();
        std::uint64_t qk = 1;
        while (j != 0) {
            const std::uint64_t c = j % q;
            if (c != 0) {
                r *= substitute_power(qk).pow(c);
            }
            j /= q;
            qk *= q;
        }
        return r;
    }

    /// Rendered high-to-low, e.g. "2T^9+2T^3+2T".
    std::string to_string(const std::string &var = "T") const
    {
        if (is_zero()) {
            return "0";
        }
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const elem c = c_[i];
            if (c == 0) {
                continue;
            }
            if (!s.empty()) {
                s += '+';
            }
            if (i == 0 || c != 1) {
                s += field_->to_string(c);
            }
            if (i >= 1) {
                s += var;
            }
            if (i >= 2) {
                s += '^' + std::to_string(i);
            }
        }
        return s;
    }
    friend std::ostream &operator<<(std::ostream &os, const Poly &a)
    {
        return os << a.to_string();
    }

    /// Parses sums of terms "c", "cT", "cT^k", "c*T^k" with integer c (mod p,
    /// or an element code when written as "[code]").
    static Poly parse(const Fq &f, const std::string &text)
    {
        std::string s;
        for (char ch : text) {
            if (!std::isspace(static_cast<unsigned char>(ch))) {
                s += ch;
            }
        }
        if (s.empty()) {
            throw domain_error("empty polynomial string");
        }
        Poly acc(f);
        std::size_t i = 0;
        while (i < s.size()) {
            bool negative = false;
            if (s[i] == '+' || s[i] == '-') {
                negative = s[i] == '-';
                ++i;
            }
            elem coef = 1;
            bool have_coef = false;
            if (i < s.size() && s[i] == '[') {
                const auto close = s.find(']', i);
                if (close == std::string::npos) {
                    throw domain_error("unterminated coefficient in '" + text + "'");
                }
                coef = static_cast<elem>(std::stoul(s.substr(i + 1, close - i - 1)));
                if (coef >= f.q()) {
                    throw domain_error("coefficient code out of range in '" + text + "'");
                }
                i = close + 1;
                have_coef = true;
            } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                std::size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                    ++j;
                }
                coef = f.from_int(std::stoll(s.substr(i, j - i)));
                i = j;
                have_coef = true;
            }
            if (i < s.size() && s[i] == '*') {
                ++i;
            }
            std::size_t power = 0;
            if (i < s.size() && (s[i] == 'T' || s[i] == 't')) {
                ++i;
                power = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    std::size_t j = i;
                    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                        ++j;
                    }
                    if (j == i) {
                        throw domain_error("missing exponent in '" + text + "'");
                    }
                    power = std::stoul(s.substr(i, j - i));
                    i = j;
                }
            } else if (!have_coef) {
                throw domain_error("cannot parse polynomial '" + text + "'");
            }
            if (negative) {
                coef = f.neg(coef);
            }
            acc += monomial(f, coef, power);
            if (i < s.size() && s[i] != '+' && s[i] != '-') {
                throw domain_error("unexpected character in '" + text + "'");
            }
        }
        return acc;
    }

private:
    void trim() noexcept
    {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }
    void check(const Poly &o) const
    {
        if (field_ != o.field_) {
            throw domain_error("mixed fields in polynomial arithmetic");
        }
    }

    const Fq *field_;
    std::vector<elem> c_;
};

/// Monic gcd (zero only when both inputs are zero).
inline Poly gcd(Poly a, Poly b)
{
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
    }
    return a.monic();
}

inline Poly lcm(const Poly &a, const Poly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return Poly(a.field());
    }
    return (a / gcd(a, b) * b).monic();
}

/// a^e mod m.
inline Poly powmod(Poly a, std::uint64_t e, const Poly &m)
{
    Poly r = Poly::one(a.field()) % m;
    a = a % m;
    while (e != 0) {
        if (e & 1u) {
            r = r * a % m;
        }
        e >>= 1;
        if (e != 0) {
            a = a * a % m;
        }
    }
    return r;
}

/// Rabin's irreducibility test.
inline bool is_irreducible(const Poly &f)
{
    const long n = f.deg();
    if (n < 1) {
        return false;
    }
    if (n == 1) {
        return true;
    }
    const Fq &F = f.field();
    const Poly T = Poly::T(F);
    // Frobenius iterates T^(q^k) mod f.
    std::vector<Poly> frob{T % f};
    for (long k = 1; k <= n; ++k) {
        frob.push_back(powmod(frob.back(), F.q(), f));
    }
    if (frob[static_cast<std::size_t>(n)] != T % f) {
        return false;
    }
    for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
        const Poly g = gcd(frob[static_cast<std::size_t>(n / static_cast<long>(r))] - T, f);
        if (!g.is_one()) {
            return false;
        }
    }
    return true;
}

/// The k-th monic polynomial of degree e (k in [0, q^e)), lower coefficients read as base-q digits of k.
inline Poly monic_at(const Fq &f, unsigned e, std::uint64_t k)
{
    std::vector<Fq::elem> c(e + 1, 0);
    c[e] = 1;
    for (unsigned i = 0; i < e; ++i) {
        c[i] = static_cast<Fq::elem>(k % f.q());
        k /= f.q();
    }
    return Poly(f, std::move(c));
}

/// All monic irreducibles of degree d, by sieve over the monics.
inline std::vector<Poly> monic_irreducibles(const Fq &f, unsigned d)
{
    std::vector<Poly> out;
    const std::uint64_t count = ipow(f.q(), d);
    for (std::uint64_t k = 0; k < count; ++k) {
        Poly m = monic_at(f, d, k);
        if (is_irreducible(m)) {
            out.push_back(std::move(m));
        }
    }
    return out;
}

/// Largest v with P^v | a (a nonzero).
inline unsigned valuation(Poly a, const Poly &P)
{
    if (a.is_zero()) {
        throw domain_error("valuation of zero");
    }
    unsigned v = 0;
    for (;;) {
        auto [quot, rem] = a.divrem(P);
        if (!rem.is_zero()) {
            return v;
        }
        a = std::move(quot);
        ++v;
    }
}

} // namespace fzeta

#endif
