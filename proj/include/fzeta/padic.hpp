#ifndef FZETA_PADIC_HPP
#define FZETA_PADIC_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <fzeta/arith.hpp>
#include <fzeta/error.hpp>

namespace fzeta
{

/// Element of Z_p written q-adically with an eventually constant digit stream:
/// explicit digits d_0..d_{n-1}, then `tail` forever.
///
/// Nonnegative integers have tail 0, negative integers tail q-1. The digit
/// vector is kept trimmed: its last entry never equals the tail.
class PAdic
{
public:
    PAdic(std::uint32_t base, std::vector<std::uint32_t> digits, std::uint32_t tail)
        : base_(base), digits_(std::move(digits)), tail_(tail)
    {
        if (!prime_power(base_)) {
            throw domain_error("PAdic base must be a prime power");
        }
        if (tail_ >= base_) {
            throw domain_error("PAdic tail digit out of range");
        }
        for (auto d : digits_) {
            if (d >= base_) {
                throw domain_error("PAdic digit out of range");
            }
        }
        trim();
    }

    static PAdic from_int(std::uint32_t base, long long n)
    {
        if (n >= 0) {
            return PAdic(base, digits_of(static_cast<std::uint64_t>(n), base), 0);
        }
        // n = (q^k + n) - q^k: digits of q^k + n followed by q-1 forever.
        std::uint64_t qk = 1;
        unsigned k = 0;
        const std::uint64_t mag = static_cast<std::uint64_t>(-(n + 1)) + 1;
        while (qk < mag) {
            qk *= base;
            ++k;
        }
        auto d = digits_of(qk - mag, base);
        d.resize(k, 0);
        return PAdic(base, std::move(d), base - 1);
    }

    std::uint32_t base() const noexcept
    {
        return base_;
    }
    const std::vector<std::uint32_t> &digits() const noexcept
    {
        return digits_;
    }
    std::uint32_t tail() const noexcept
    {
        return tail_;
    }
    std::uint32_t digit(std::size_t i) const noexcept
    {
        return i < digits_.size() ? digits_[i] : tail_;
    }
    bool is_nonnegative_integer() const noexcept
    {
        return tail_ == 0;
    }
    bool is_integer() const noexcept
    {
        return tail_ == 0 || tail_ == base_ - 1;
    }

    std::optional<long long> to_int() const
    {
        if (!is_integer()) {
            return std::nullopt;
        }
        // Value of the explicit part, then subtract q^n for a (q-1)-tail.
        long double bound = 1;
        for (std::size_t i = 0; i <= digits_.size(); ++i) {
            bound *= base_;
        }
        if (bound > static_cast<long double>(std::numeric_limits<long long>::max() / 2)) {
            throw domain_error("PAdic integer does not fit in 64 bits");
        }
        long long v = 0;
        for (std::size_t i = digits_.size(); i-- > 0;) {
            v = v * base_ + digits_[i];
        }
        if (tail_ == 0) {
            return v;
        }
        long long qn = 1;
        for (std::size_t i = 0; i < digits_.size(); ++i) {
            qn *= base_;
        }
        return v - qn;
    }

    long long to_int_checked() const
    {
        auto v = to_int();
        if (!v) {
            throw domain_error("PAdic value is not an integer");
        }
        return *v;
    }

    PAdic operator-() const
    {
        // -x = complement(x) + 1.
        std::vector<std::uint32_t> d(digits_.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            d[i] = base_ - 1 - digits_[i];
        }
        std::uint32_t t = base_ - 1 - tail_;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] + 1 < base_) {
                ++d[i];
                return PAdic(base_, std::move(d), t);
            }
            d[i] = 0;
        }
        if (t + 1 < base_) {
            d.push_back(t + 1);
            return PAdic(base_, std::move(d), t);
        }
        // Complement was all q-1: the carry runs forever.
        return PAdic(base_, {}, 0);
    }

    friend PAdic operator+(const PAdic &a, const PAdic &b)
    {
        a.check(b);
        const std::size_t n = std::max(a.digits_.size(), b.digits_.size()) + 2;
        std::vector<std::uint32_t> d(n);
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t s = a.digit(i) + b.digit(i) + carry;
            d[i] = s % a.base_;
            carry = s / a.base_;
        }
        // Past index n the digit pair is (tail_a, tail_b) and the carry has settled.
        const std::uint32_t s = a.tail_ + b.tail_ + carry;
        std::uint32_t t = s % a.base_;
        if (s / a.base_ != carry) {
            // One more step to settle the carry (happens only once).
            d.push_back(t);
            t = (a.tail_ + b.tail_ + s / a.base_) % a.base_;
        }
        return PAdic(a.base_, std::move(d), t);
    }
    friend PAdic operator-(const PAdic &a, const PAdic &b)
    {
        return a + (-b);
    }

    friend bool operator==(const PAdic &a, const PAdic &b) noexcept
    {
        return a.base_ == b.base_ && a.tail_ == b.tail_ && a.digits_ == b.digits_;
    }
    friend bool operator!=(const PAdic &a, const PAdic &b) noexcept
    {
        return !(a == b);
    }

    /// x == y mod q^t.
    bool congruent(const PAdic &o, std::size_t t) const
    {
        check(o);
        for (std::size_t i = 0; i < t; ++i) {
            if (digit(i) != o.digit(i)) {
                return false;
            }
        }
        return true;
    }

    /// The k-th digit of the same element written in base p (q = p^n0).
    std::uint32_t base_p_digit(std::size_t k) const
    {
        const auto pp = prime_power(base_);
        const std::uint32_t p = pp->first;
        const std::uint32_t n0 = pp->second;
        std::uint32_t d = digit(k / n0);
        for (std::size_t i = 0; i < k % n0; ++i) {
            d /= p;
        }
        return d % p;
    }

    /// Re-expresses the element in base p.
    PAdic to_base_p() const
    {
        const auto pp = prime_power(base_);
        const std::uint32_t p = pp->first;
        const std::uint32_t n0 = pp->second;
        if (n0 == 1) {
            return *this;
        }
        const auto td = digits_of(tail_, p);
        bool const_tail = true;
        for (std::uint32_t i = 0; i < n0; ++i) {
            if ((i < td.size() ? td[i] : 0) != (td.empty() ? 0 : td[0])) {
                const_tail = false;
            }
        }
        if (!const_tail) {
            throw domain_error("tail is not constant in base p");
        }
        std::vector<std::uint32_t> d(digits_.size() * n0);
        for (std::size_t k = 0; k < d.size(); ++k) {
            d[k] = base_p_digit(k);
        }
        return PAdic(p, std::move(d), td.empty() ? 0 : td[0]);
    }

    std::string to_string() const
    {
        if (is_integer()) {
            try {
                return std::to_string(*to_int());
            } catch (const domain_error &) {
            }
        }
        std::string s = "[";
        for (std::size_t i = 0; i < digits_.size(); ++i) {
            s += (i ? "," : "") + std::to_string(digits_[i]);
        }
        return s + "](" + std::to_string(tail_) + ")";
    }
    friend std::ostream &operator<<(std::ostream &os, const PAdic &x)
    {
        return os << x.to_string();
    }

private:
    void trim() noexcept
    {
        while (!digits_.empty() && digits_.back() == tail_) {
            digits_.pop_back();
        }
    }
    void check(const PAdic &o) const
    {
        if (base_ != o.base_) {
            throw domain_error("mixed bases in PAdic arithmetic");
        }
    }

    std::uint32_t base_;
    std::vector<std::uint32_t> digits_;
    std::uint32_t tail_;
};

/// Digit sum l_q(n) of a nonnegative integer.
inline std::uint64_t ell_q(const PAdic &n)
{
    if (!n.is_nonnegative_integer()) {
        throw domain_error("digit sum is defined only for nonnegative integers");
    }
    std::uint64_t s = 0;
    for (auto d : n.digits()) {
        s += d;
    }
    return s;
}

/// C(y, k) mod p for y in Z_p, by Lucas' theorem on base-p digits.
inline std::uint32_t binom_padic(const PAdic &y, std::uint64_t k)
{
    const std::uint32_t p = prime_power(y.base())->first;
    std::uint64_t r = 1;
    std::size_t idx = 0;
    while (k != 0) {
        const std::uint64_t kd = k % p;
        const std::uint64_t yd = y.base_p_digit(idx);
        if (kd > yd) {
            return 0;
        }
        r = r * (small_binomial(yd, kd) % p) % p;
        k /= p;
        ++idx;
    }
    return static_cast<std::uint32_t>(r);
}

} // namespace fzeta

#endif
