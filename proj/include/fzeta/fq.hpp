#ifndef FZETA_FQ_HPP
#define FZETA_FQ_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <fzeta/arith.hpp>
#include <fzeta/error.hpp>

namespace fzeta
{

/// The finite field F_q, q = p^n0, on the polynomial basis of F_p[x]/(modulus).
///
/// Elements are encoded as integers in [0, q): the code of
/// c_0 + c_1 x + ... + c_{n0-1} x^{n0-1} is sum c_i p^i. Fields are interned by
/// Fq::get() and live for the whole process, so elements may hold a plain pointer.
class Fq
{
public:
    using elem = std::uint32_t;

    static constexpr std::uint32_t max_q = 1u << 16;

    /// Field of order q with the built-in modulus (or the first irreducible found).
    static const Fq &get(std::uint32_t q)
    {
        const auto pp = prime_power(q);
        if (!pp || q > max_q) {
            throw domain_error("unsupported field order q = " + std::to_string(q));
        }
        return get(pp->first, default_modulus(pp->first, pp->second));
    }

    /// Field F_p[x]/(modulus); modulus is monic, low-to-high base-p coefficients.
    static const Fq &get(std::uint32_t p, const std::vector<std::uint32_t> &modulus)
    {
        static std::mutex mtx;
        static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<const Fq>> registry;
        std::vector<std::uint32_t> key_mod = modulus;
        if (key_mod.size() <= 2) {
            // Every degree-one modulus gives the prime field.
            key_mod = {0, 1};
        }
        const std::lock_guard<std::mutex> lock(mtx);
        auto &slot = registry[{p, key_mod}];
        if (!slot) {
            slot.reset(new Fq(p, key_mod));
        }
        return *slot;
    }

    std::uint32_t p() const noexcept
    {
        return p_;
    }
    std::uint32_t n0() const noexcept
    {
        return n0_;
    }
    std::uint32_t q() const noexcept
    {
        return q_;
    }
    const std::vector<std::uint32_t> &modulus() const noexcept
    {
        return modulus_;
    }
    bool is_prime_field() const noexcept
    {
        return n0_ == 1;
    }

    elem zero() const noexcept
    {
        return 0;
    }
    elem one() const noexcept
    {
        return 1;
    }

    /// Image of an integer under Z -> F_p -> F_q.
    elem from_int(long long n) const noexcept
    {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) {
            r += p_;
        }
        return static_cast<elem>(r);
    }

    elem add(elem a, elem b) const noexcept
    {
        if (n0_ == 1) {
            const elem s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (p_ == 2) {
            return a ^ b;
        }
        if (!add_table_.empty()) {
            return add_table_[static_cast<std::size_t>(a) * q_ + b];
        }
        return add_digits(a, b);
    }

    elem neg(elem a) const noexcept
    {
        if (n0_ == 1) {
            return a == 0 ? 0 : p_ - a;
        }
        if (p_ == 2) {
            return a;
        }
        return neg_table_[a];
    }

    elem sub(elem a, elem b) const noexcept
    {
        return add(a, neg(b));
    }

    elem mul(elem a, elem b) const noexcept
    {
        if (a == 0 || b == 0) {
            return 0;
        }
        if (n0_ == 1) {
            return static_cast<elem>((static_cast<std::uint64_t>(a) * b) % p_);
        }
        return exp_[log_[a] + log_[b]];
    }

    elem inv(elem a) const
    {
        if (a == 0) {
            throw domain_error("division by zero in F_" + std::to_string(q_));
        }
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    elem div(elem a, elem b) const
    {
        return mul(a, inv(b));
    }

    elem pow(elem a, std::uint64_t k) const noexcept
    {
        if (k == 0) {
            return 1;
        }
        if (a == 0) {
            return 0;
        }
        const std::uint64_t e = (static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1);
        return exp_[e];
    }

    /// a -> a^p.
    elem frobenius(elem a) const noexcept
    {
        return pow(a, p_);
    }

    /// Scalar multiple by an integer (through F_p).
    elem mul_int(elem a, long long n) const noexcept
    {
        return mul(a, from_int(n));
    }

    std::vector<std::uint32_t> digits(elem a) const
    {
        std::vector<std::uint32_t> out(n0_);
        for (std::uint32_t i = 0; i < n0_; ++i) {
            out[i] = a % p_;
            a /= p_;
        }
        return out;
    }

    elem from_digits(const std::vector<std::uint32_t> &d) const
    {
        if (d.size() > n0_) {
            throw domain_error("too many base-p digits for an element of F_" + std::to_string(q_));
        }
        elem a = 0;
        for (std::size_t i = d.size(); i-- > 0;) {
            if (d[i] >= p_) {
                throw domain_error("base-p digit out of range");
            }
            a = a * p_ + d[i];
        }
        return a;
    }

    /// Readable form: integers for prime fields, "(x+1)"-style otherwise.
    std::string to_string(elem a) const
    {
        if (n0_ == 1) {
            return std::to_string(a);
        }
        const auto d = digits(a);
        std::string s;
        for (std::size_t i = d.size(); i-- > 0;) {
            if (d[i] == 0) {
                continue;
            }
            if (!s.empty()) {
                s += '+';
            }
            if (i == 0 || d[i] != 1) {
                s += std::to_string(d[i]);
            }
            if (i >= 1) {
                s += 'x';
            }
            if (i >= 2) {
                s += '^' + std::to_string(i);
            }
        }
        return s.empty() ? "0" : "(" + s + ")";
    }

    Fq(const Fq &) = delete;
    Fq &operator=(const Fq &) = delete;

private:
    Fq(std::uint32_t p, std::vector<std::uint32_t> modulus)
        : p_(p), n0_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus))
    {
        if (!is_prime(p_) || p_ > 97) {
            throw domain_error("characteristic must be a prime <= 97");
        }
        if (modulus_.back() != 1) {
            throw domain_error("modulus must be monic");
        }
        const std::uint64_t q = ipow(p_, n0_);
        if (q > max_q) {
            throw domain_error("field order exceeds 2^16");
        }
        q_ = static_cast<std::uint32_t>(q);
        build_tables();
    }

    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t n0)
    {
        if (n0 == 1) {
            return {0, 1};
        }
        const std::uint64_t q = ipow(p, n0);
        switch (q) {
        case 4:
            return {1, 1, 1};
        case 8:
            return {1, 1, 0, 1};
        case 9:
            return {1, 0, 1};
        case 16:
            return {1, 1, 0, 0, 1};
        case 25:
            return {2, 0, 1};
        case 27:
            return {1, 2, 0, 1};
        default:
            break;
        }
        // Lexicographically first monic irreducible: scan candidates with no roots
        // and a primitive element (build_tables() rejects the reducible ones).
        std::vector<std::uint32_t> m(n0 + 1, 0);
        m[n0] = 1;
        const std::uint64_t count = ipow(p, n0);
        for (std::uint64_t c = 1; c < count; ++c) {
            std::uint64_t t = c;
            for (std::uint32_t i = 0; i < n0; ++i) {
                m[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (m[0] == 0) {
                continue;
            }
            try {
                Fq probe(p, m);
                (void)probe;
                return m;
            } catch (const domain_error &) {
            }
        }
        throw domain_error("no irreducible modulus found");
    }

    elem add_digits(elem a, elem b) const noexcept
    {
        elem r = 0;
        elem scale = 1;
        for (std::uint32_t i = 0; i < n0_; ++i) {
            r += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return r;
    }

    // Multiplication on codes straight from the modulus; used only to build tables.
    elem mul_slow(elem a, elem b) const
    {
        const auto da = digits(a);
        const auto db = digits(b);
        std::vector<std::uint32_t> prod(2 * n0_, 0);
        for (std::uint32_t i = 0; i < n0_; ++i) {
            for (std::uint32_t j = 0; j < n0_; ++j) {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            }
        }
        for (std::size_t k = prod.size(); k-- > n0_;) {
            const std::uint32_t c = prod[k];
            if (c == 0) {
                continue;
            }
            for (std::uint32_t i = 0; i <= n0_; ++i) {
                const std::size_t idx = k - n0_ + i;
                prod[idx] = (prod[idx] + (p_ - c) * modulus_[i]) % p_;
            }
        }
        prod.resize(n0_);
        return from_digits(prod);
    }

    void build_tables()
    {
        if (n0_ == 1) {
            log_.assign(q_, 0);
            exp_.assign(2 * static_cast<std::size_t>(q_), 0);
            // Primitive root mod p.
            const auto fac = prime_factors(q_ - 1);
            elem g = 1;
            for (elem cand = 1; cand < q_; ++cand) {
                bool ok = true;
                for (auto r : fac) {
                    if (pow_mod(cand, (q_ - 1) / r) == 1) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    g = cand;
                    break;
                }
            }
            elem x = 1;
            for (std::uint32_t i = 0; i + 1 < q_; ++i) {
                exp_[i] = x;
                exp_[i + q_ - 1] = x;
                log_[x] = i;
                x = static_cast<elem>((static_cast<std::uint64_t>(x) * g) % q_);
            }
            return;
        }
        const auto fac = prime_factors(q_ - 1);
        auto slow_pow = [this](elem a, std::uint64_t k) {
            elem r = 1;
            while (k != 0) {
                if (k & 1u) {
                    r = mul_slow(r, a);
                }
                a = mul_slow(a, a);
                k >>= 1;
            }
            return r;
        };
        elem g = 0;
        for (elem cand = 2; cand < q_ && g == 0; ++cand) {
            if (slow_pow(cand, q_ - 1) != 1) {
                continue;
            }
            bool ok = true;
            for (auto r : fac) {
                if (slow_pow(cand, (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                g = cand;
            }
        }
        if (g == 0) {
            throw domain_error("modulus is not irreducible over F_p");
        }
        log_.assign(q_, 0);
        exp_.assign(2 * static_cast<std::size_t>(q_), 0);
        std::vector<bool> seen(q_, false);
        elem x = 1;
        for (std::uint32_t i = 0; i + 1 < q_; ++i) {
            if (seen[x]) {
                throw domain_error("modulus is not irreducible over F_p");
            }
            seen[x] = true;
            exp_[i] = x;
            exp_[i + q_ - 1] = x;
            log_[x] = i;
            x = mul_slow(x, g);
        }
        if (p_ != 2) {
            neg_table_.resize(q_);
            for (elem a = 0; a < q_; ++a) {
                auto d = digits(a);
                for (auto &c : d) {
                    c = (p_ - c) % p_;
                }
                neg_table_[a] = from_digits(d);
            }
            if (q_ <= 256) {
                add_table_.resize(static_cast<std::size_t>(q_) * q_);
                for (elem a = 0; a < q_; ++a) {
                    for (elem b = 0; b < q_; ++b) {
                        add_table_[static_cast<std::size_t>(a) * q_ + b] = add_digits(a, b);
                    }
                }
            }
        }
    }

    elem pow_mod(elem a, std::uint64_t k) const noexcept
    {
        std::uint64_t r = 1;
        std::uint64_t b = a % p_;
        while (k != 0) {
            if (k & 1u) {
                r = r * b % p_;
            }
            b = b * b % p_;
            k >>= 1;
        }
        return static_cast<elem>(r);
    }

    std::uint32_t p_;
    std::uint32_t n0_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> log_;
    std::vector<elem> exp_;
    std::vector<elem> neg_table_;
    std::vector<elem> add_table_;
};

/// An element of F_q bound to its field.
class FqElem
{
public:
    FqElem(const Fq &f, Fq::elem v) : field_(&f), v_(v) {}

    static FqElem from_int(const Fq &f, long long n)
    {
        return FqElem(f, f.from_int(n));
    }

    const Fq &field() const noexcept
    {
        return *field_;
    }
    Fq::elem code() const noexcept
    {
        return v_;
    }
    bool is_zero() const noexcept
    {
        return v_ == 0;
    }
    std::vector<std::uint32_t> coords() const
    {
        return field_->digits(v_);
    }
    std::string to_string() const
    {
        return field_->to_string(v_);
    }

    friend FqElem operator+(const FqElem &a, const FqElem &b)
    {
        a.check(b);
        return {*a.field_, a.field_->add(a.v_, b.v_)};
    }
    friend FqElem operator-(const FqElem &a, const FqElem &b)
    {
        a.check(b);
        return {*a.field_, a.field_->sub(a.v_, b.v_)};
    }
    friend FqElem operator*(const FqElem &a, const FqElem &b)
    {
        a.check(b);
        return {*a.field_, a.field_->mul(a.v_, b.v_)};
    }
    friend FqElem operator/(const FqElem &a, const FqElem &b)
    {
        a.check(b);
        return {*a.field_, a.field_->div(a.v_, b.v_)};
    }
    FqElem operator-() const
    {
        return {*field_, field_->neg(v_)};
    }
    FqElem pow(std::uint64_t k) const
    {
        return {*field_, field_->pow(v_, k)};
    }
    FqElem inv() const
    {
        return {*field_, field_->inv(v_)};
    }
    FqElem frobenius() const
    {
        return {*field_, field_->frobenius(v_)};
    }
    friend bool operator==(const FqElem &a, const FqElem &b) noexcept
    {
        return a.field_ == b.field_ && a.v_ == b.v_;
    }
    friend std::ostream &operator<<(std::ostream &os, const FqElem &a)
    {
        return os << a.field_->to_string(a.v_);
    }

private:
    void check(const FqElem &o) const
    {
        if (field_ != o.field_) {
            throw domain_error("mixed fields in F_q arithmetic");
        }
    }

    const Fq *field_;
    Fq::elem v_;
};

} // namespace fzeta

#endif
