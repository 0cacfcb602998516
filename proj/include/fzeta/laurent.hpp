#ifndef FZETA_LAURENT_HPP
#define FZETA_LAURENT_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <fzeta/arith.hpp>
#include <fzeta/error.hpp>
#include <fzeta/fq.hpp>
#include <fzeta/padic.hpp>
#include <fzeta/poly.hpp>

namespace fzeta
{

/// Truncated Laurent series over F_q in a named uniformizer.
///
/// The value is sum_{k >= ord} c_k pi^k + O(pi^abs): coefficients are known for
/// exponents below the absolute precision `abs` and nothing beyond it is ever
/// invented. A series with no known nonzero term is a zero with ord == abs.
/// Arithmetic tracks precision pessimistically; operands must share a
/// parameter tag.
class Laurent
{
public:
    using elem = Fq::elem;

    static constexpr long default_precision = 32;

    static Laurent zero(const Fq &f, std::string param, long abs)
    {
        return Laurent(f, std::move(param), abs, {}, abs);
    }

    /// sum_k coeffs[k] pi^(ord + k) + O(pi^abs).
    static Laurent from_coeffs(const Fq &f, std::string param, long ord, std::vector<elem> coeffs, long abs)
    {
        return Laurent(f, std::move(param), ord, std::move(coeffs), abs);
    }

    static Laurent monomial(const Fq &f, std::string param, elem c, long k, long abs)
    {
        return Laurent(f, std::move(param), k, {c}, abs);
    }

    /// A polynomial in pi read as a series, known to O(pi^abs).
    static Laurent from_pi_poly(const Poly &a, std::string param, long abs)
    {
        return Laurent(a.field(), std::move(param), 0, a.coeffs(), abs);
    }

    /// A polynomial in T with T = 1/pi, known to O(pi^abs).
    static Laurent from_T_poly(const Poly &a, std::string param, long abs)
    {
        if (a.is_zero()) {
            return zero(a.field(), std::move(param), abs);
        }
        std::vector<elem> c(a.coeffs().rbegin(), a.coeffs().rend());
        return Laurent(a.field(), std::move(param), -a.deg(), std::move(c), abs);
    }

    const Fq &field() const noexcept
    {
        return *field_;
    }
    const std::string &param() const noexcept
    {
        return param_;
    }
    /// Lowest known nonzero exponent (== abs_prec() for a zero series).
    long ord() const noexcept
    {
        return ord_;
    }
    long abs_prec() const noexcept
    {
        return abs_;
    }
    /// Number of known terms from ord() on.
    long rel_prec() const noexcept
    {
        return abs_ - ord_;
    }
    bool is_zero() const noexcept
    {
        return c_.empty();
    }
    const std::vector<elem> &coeffs() const noexcept
    {
        return c_;
    }
    elem lead() const noexcept
    {
        return c_.empty() ? 0 : c_.front();
    }

    /// Coefficient of pi^k; throws beyond the precision window.
    elem coeff(long k) const
    {
        if (k >= abs_) {
            throw precision_error("coefficient beyond known precision", abs_, k + 1);
        }
        if (k < ord_) {
            return 0;
        }
        return c_[static_cast<std::size_t>(k - ord_)];
    }

    Laurent truncate(long abs) const
    {
        if (abs >= abs_) {
            return *this;
        }
        std::vector<elem> c;
        if (abs > ord_) {
            c.assign(c_.begin(), c_.begin() + (abs - ord_));
        }
        return Laurent(*field_, param_, ord_, std::move(c), abs);
    }

    /// Same value with a different parameter tag (used when a series is reinterpreted).
    Laurent retag(std::string param) const
    {
        Laurent r = *this;
        r.param_ = std::move(param);
        return r;
    }

    /// Agreement on all exponents below min(abs of both).
    bool agrees_with(const Laurent &o) const
    {
        check(o);
        const long top = std::min(abs_, o.abs_);
        for (long k = std::min(ord_, o.ord_); k < top; ++k) {
            if (coeff(k) != o.coeff(k)) {
                return false;
            }
        }
        return true;
    }

    friend Laurent operator+(const Laurent &a, const Laurent &b)
    {
        a.check(b);
        const long abs = std::min(a.abs_, b.abs_);
        const long lo = std::min(a.ord_, b.ord_);
        if (lo >= abs) {
            return zero(*a.field_, a.param_, abs);
        }
        std::vector<elem> c(static_cast<std::size_t>(abs - lo), 0);
        const Fq &f = *a.field_;
        for (std::size_t i = 0; i < a.c_.size() && a.ord_ + static_cast<long>(i) < abs; ++i) {
            auto &slot = c[static_cast<std::size_t>(a.ord_ - lo) + i];
            slot = f.add(slot, a.c_[i]);
        }
        for (std::size_t i = 0; i < b.c_.size() && b.ord_ + static_cast<long>(i) < abs; ++i) {
            auto &slot = c[static_cast<std::size_t>(b.ord_ - lo) + i];
            slot = f.add(slot, b.c_[i]);
        }
        return Laurent(f, a.param_, lo, std::move(c), abs);
    }
    Laurent operator-() const
    {
        Laurent r = *this;
        for (auto &x : r.c_) {
            x = field_->neg(x);
        }
        return r;
    }
    friend Laurent operator-(const Laurent &a, const Laurent &b)
    {
        return a + (-b);
    }

    friend Laurent operator*(const Laurent &a, const Laurent &b)
    {
        a.check(b);
        const long abs = std::min(a.ord_ + b.abs_, b.ord_ + a.abs_);
        if (a.is_zero() || b.is_zero()) {
            return zero(*a.field_, a.param_, abs);
        }
        const long ord = a.ord_ + b.ord_;
        const std::size_t n = static_cast<std::size_t>(std::max(0L, abs - ord));
        std::vector<elem> c(n, 0);
        const Fq &f = *a.field_;
        for (std::size_t i = 0; i < a.c_.size() && i < n; ++i) {
            if (a.c_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size() && i + j < n; ++j) {
                if (b.c_[j] != 0) {
                    c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
                }
            }
        }
        return Laurent(f, a.param_, ord, std::move(c), abs);
    }
    Laurent &operator+=(const Laurent &b)
    {
        *this = *this + b;
        return *this;
    }
    Laurent &operator*=(const Laurent &b)
    {
        *this = *this * b;
        return *this;
    }

    Laurent scale(elem s) const
    {
        if (s == 0) {
            return zero(*field_, param_, abs_);
        }
        Laurent r = *this;
        for (auto &x : r.c_) {
            x = field_->mul(x, s);
        }
        return r;
    }

    /// Exact multiplication by pi^k.
    Laurent shift(long k) const
    {
        Laurent r = *this;
        r.ord_ += k;
        r.abs_ += k;
        return r;
    }

    Laurent inv() const
    {
        if (is_zero()) {
            throw domain_error("inversion of a series with no known nonzero term");
        }
        const std::size_t n = static_cast<std::size_t>(rel_prec());
        const Fq &f = *field_;
        const elem il = f.inv(c_[0]);
        std::vector<elem> r(n, 0);
        r[0] = il;
        for (std::size_t k = 1; k < n; ++k) {
            elem s = 0;
            for (std::size_t i = 1; i <= k && i < c_.size(); ++i) {
                if (c_[i] != 0 && r[k - i] != 0) {
                    s = f.add(s, f.mul(c_[i], r[k - i]));
                }
            }
            r[k] = f.neg(f.mul(s, il));
        }
        return Laurent(f, param_, -ord_, std::move(r), -ord_ + rel_prec());
    }
    friend Laurent operator/(const Laurent &a, const Laurent &b)
    {
        return a * b.inv();
    }

    Laurent pow(long n) const
    {
        if (n < 0) {
            return inv().pow(-n);
        }
        Laurent r = monomial(*field_, param_, 1, 0, std::max(abs_ - ord_, 1L) + std::max(0L, ord_ * n) + 64);
        if (n == 0) {
            return r.truncate(rel_prec() > 0 ? std::max(rel_prec(), 1L) : 1);
        }
        Laurent b = *this;
        bool first = true;
        while (n != 0) {
            if (n & 1) {
                r = first ? b : r * b;
                first = false;
            }
            n >>= 1;
            if (n != 0) {
                b = b * b;
            }
        }
        return r;
    }

    /// Raises every coefficient to p^k and every exponent times p^k: x -> x^(p^k).
    Laurent frobenius_p(unsigned k) const
    {
        const std::uint64_t pk = ipow(field_->p(), k);
        const long pkl = static_cast<long>(pk);
        const long ord = ord_ * pkl;
        const long abs = ord_ * pkl + rel_prec() * pkl;
        std::vector<elem> c(static_cast<std::size_t>(abs - ord), 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c[i * pk] = field_->pow(c_[i], pk);
        }
        return Laurent(*field_, param_, ord, std::move(c), abs);
    }

    friend bool operator==(const Laurent &a, const Laurent &b) noexcept
    {
        return a.field_ == b.field_ && a.param_ == b.param_ && a.ord_ == b.ord_ && a.abs_ == b.abs_ &&
               a.c_ == b.c_;
    }

    /// Nonzero known terms, e.g. "pi+pi^4"; with_order appends "+O(pi^abs)".
    std::string to_string(bool with_order = true) const
    {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const elem c = c_[i];
            if (c == 0) {
                continue;
            }
            const long k = ord_ + static_cast<long>(i);
            if (!s.empty()) {
                s += '+';
            }
            if (c != 1 || k == 0) {
                s += field_->to_string(c);
            }
            if (k != 0) {
                s += param_;
                if (k != 1) {
                    s += '^' + std::to_string(k);
                }
            }
        }
        if (with_order) {
            s += (s.empty() ? "" : "+") + std::string("O(") + param_ + "^" + std::to_string(abs_) + ")";
        }
        return s.empty() ? "0" : s;
    }
    friend std::ostream &operator<<(std::ostream &os, const Laurent &x)
    {
        return os << x.to_string();
    }

    void check(const Laurent &o) const
    {
        if (field_ != o.field_) {
            throw domain_error("mixed fields in Laurent arithmetic");
        }
        if (param_ != o.param_) {
            throw domain_error("mixed parameters '" + param_ + "' and '" + o.param_ +
                               "' in Laurent arithmetic; recompose first");
        }
    }

private:
    Laurent(const Fq &f, std::string param, long ord, std::vector<elem> c, long abs)
        : field_(&f), param_(std::move(param)), ord_(ord), abs_(abs), c_(std::move(c))
    {
        if (static_cast<long>(c_.size()) > abs_ - ord_) {
            c_.resize(static_cast<std::size_t>(std::max(0L, abs_ - ord_)));
        }
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) {
            ++lead;
        }
        if (lead == c_.size()) {
            c_.clear();
            ord_ = abs_;
            return;
        }
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        ord_ += static_cast<long>(lead);
        c_.resize(static_cast<std::size_t>(abs_ - ord_), 0);
    }

    const Fq *field_;
    std::string param_;
    long ord_;
    long abs_;
    std::vector<elem> c_;
};

/// A Laurent series of the form 1 + (terms of positive order).
class OneUnit
{
public:
    explicit OneUnit(Laurent u) : u_(std::move(u))
    {
        if (u_.is_zero() || u_.ord() != 0 || u_.lead() != 1) {
            throw domain_error("not a one-unit: " + u_.to_string());
        }
    }
    const Laurent &value() const noexcept
    {
        return u_;
    }

private:
    Laurent u_;
};

/// (deg f, <f>) for monic f, where <f> = pi^deg(f) f is the coefficient reversal in pi = 1/T.
inline std::pair<long, OneUnit> one_unit_of(const Poly &f, long N, const std::string &param = "pi")
{
    if (!f.is_monic()) {
        throw domain_error("one-unit part is taken only of monic (positive) polynomials");
    }
    std::vector<Fq::elem> c(f.coeffs().rbegin(), f.coeffs().rend());
    return {f.deg(), OneUnit(Laurent::from_coeffs(f.field(), param, 0, std::move(c), N))};
}

/// u^y for a one-unit u and y in Z_p, known to O(pi^N).
///
/// Uses (1+v)^y = prod_i (1 + v^(p^i))^(y_i) over the base-p digits y_i of y; only
/// the digits with p^i < N matter because ord v >= 1.
inline Laurent one_unit_pow(const OneUnit &u, const PAdic &y, long N)
{
    const Laurent &x = u.value();
    const Fq &f = x.field();
    if (prime_power(y.base())->first != f.p()) {
        throw domain_error("exponent lives in Z_p for a different p");
    }
    const long abs = std::min(N, x.abs_prec());
    const Laurent one = Laurent::monomial(f, x.param(), 1, 0, abs);
    const Laurent v = (x - one).truncate(abs);
    Laurent acc = one;
    std::uint64_t pk = 1;
    for (unsigned i = 0; static_cast<long>(pk) < abs; ++i, pk *= f.p()) {
        const std::uint32_t d = y.base_p_digit(i);
        if (d == 0 || v.is_zero()) {
            continue;
        }
        const Laurent w = (one + v.frobenius_p(i)).truncate(abs);
        for (std::uint32_t t = 0; t < d; ++t) {
            acc = acc * w;
        }
    }
    return acc.truncate(abs);
}

/// Compositional inverse of a positive parameter change g = t + O(t^2): returns h with g(h(t)) = t.
Laurent reversion(const Laurent &g);

/// x(g) where x is a series in pi1 and g expresses pi1 as a series in pi2; the
/// result is a series in g's parameter, known as far as the inputs allow.
inline Laurent recompose(const Laurent &x, const Laurent &g)
{
    if (&x.field() != &g.field()) {
        throw domain_error("mixed fields in recompose");
    }
    if (g.is_zero() || g.ord() != 1) {
        throw domain_error("reparametrization must have order exactly 1");
    }
    if (g.lead() != 1) {
        throw domain_error("reparametrization must be positive (leading coefficient 1)");
    }
    const Fq &f = x.field();
    if (x.is_zero()) {
        // O(pi1^A) becomes O(pi2^A).
        return Laurent::zero(f, g.param(), x.abs_prec());
    }
    // x = pi1^o w(pi1) with w a unit known to relative precision K.
    const long o = x.ord();
    const long K = x.rel_prec();
    Laurent acc = Laurent::zero(f, g.param(), 0);
    for (long k = K; k-- > 0;) {
        acc = acc * g + Laurent::monomial(f, g.param(), x.coeff(o + k), 0, K + 64);
    }
    return acc * g.pow(o);
}

inline Laurent reversion(const Laurent &g)
{
    if (g.is_zero() || g.ord() != 1 || g.lead() == 0) {
        throw domain_error("reversion needs a series of order exactly 1");
    }
    const Fq &f = g.field();
    const long abs = g.abs_prec();
    const Fq::elem il = f.inv(g.lead());
    // h = t/lead + corrections, fixed one order at a time.
    std::vector<Fq::elem> hc(static_cast<std::size_t>(abs), 0);
    hc[1] = il;
    for (long k = 2; k < abs; ++k) {
        const Laurent h = Laurent::from_coeffs(f, g.param(), 0, hc, abs);
        const Laurent gh = recompose(g, h);
        const Fq::elem err = gh.coeff(k);
        if (err != 0) {
            hc[static_cast<std::size_t>(k)] = f.sub(hc[static_cast<std::size_t>(k)], f.mul(err, il));
        }
    }
    return Laurent::from_coeffs(f, g.param(), 0, std::move(hc), abs);
}

} // namespace fzeta

#endif
