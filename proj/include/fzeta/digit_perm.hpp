#ifndef FZETA_DIGIT_PERM_HPP
#define FZETA_DIGIT_PERM_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <fzeta/arith.hpp>
#include <fzeta/error.hpp>
#include <fzeta/padic.hpp>

namespace fzeta
{

/// A permutation of {0, 1, 2, ...} moving only finitely many points.
class DigitPerm
{
public:
    DigitPerm() = default;

    /// From (from, to) pairs; unspecified points are fixed.
    explicit DigitPerm(const std::vector<std::pair<std::uint32_t, std::uint32_t>> &pairs)
    {
        std::set<std::uint32_t> targets;
        for (auto [a, b] : pairs) {
            if (map_.count(a) != 0) {
                throw domain_error("digit permutation maps " + std::to_string(a) + " twice");
            }
            if (!targets.insert(b).second) {
                throw domain_error("digit permutation is not injective at " + std::to_string(b));
            }
            map_[a] = b;
        }
        // A finite-support bijection permutes its moved set: sources == targets.
        std::set<std::uint32_t> sources;
        for (auto &[a, b] : map_) {
            sources.insert(a);
        }
        if (sources != targets) {
            throw domain_error("digit permutation is not a bijection of its support");
        }
        prune();
    }

    static DigitPerm swap(std::uint32_t a, std::uint32_t b)
    {
        if (a == b) {
            return {};
        }
        return DigitPerm({{a, b}, {b, a}});
    }

    /// Cycle notation "(0 1 2)(4 5)": 0 -> 1 -> 2 -> 0, 4 <-> 5.
    static DigitPerm parse_cycles(const std::string &text)
    {
        DigitPerm acc;
        std::size_t i = 0;
        while (i < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            if (text[i] != '(') {
                throw domain_error("expected '(' in cycle notation '" + text + "'");
            }
            const auto close = text.find(')', i);
            if (close == std::string::npos) {
                throw domain_error("unterminated cycle in '" + text + "'");
            }
            std::vector<std::uint32_t> cyc;
            std::string tok;
            for (std::size_t k = i + 1; k <= close; ++k) {
                const char ch = text[k];
                if (std::isdigit(static_cast<unsigned char>(ch))) {
                    tok += ch;
                } else if (!tok.empty()) {
                    cyc.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
                    tok.clear();
                } else if (ch != ' ' && ch != ',' && ch != ')') {
                    throw domain_error("bad character in cycle notation '" + text + "'");
                }
            }
            std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                pairs.emplace_back(cyc[k], cyc[(k + 1) % cyc.size()]);
            }
            // Cycles are applied left to right as written: acc then this cycle.
            acc = DigitPerm(pairs).compose(acc);
            i = close + 1;
        }
        return acc;
    }

    std::uint32_t operator()(std::uint32_t i) const
    {
        const auto it = map_.find(i);
        return it == map_.end() ? i : it->second;
    }

    bool is_identity() const noexcept
    {
        return map_.empty();
    }

    /// One past the largest moved point (0 for the identity).
    std::uint32_t support_bound() const noexcept
    {
        return map_.empty() ? 0 : map_.rbegin()->first + 1;
    }

    /// (this o other)(i) = this(other(i)).
    DigitPerm compose(const DigitPerm &other) const
    {
        DigitPerm r;
        const std::uint32_t n = std::max(support_bound(), other.support_bound());
        for (std::uint32_t i = 0; i < n; ++i) {
            const std::uint32_t v = (*this)(other(i));
            if (v != i) {
                r.map_[i] = v;
            }
        }
        return r;
    }

    DigitPerm inverse() const
    {
        DigitPerm r;
        for (auto [a, b] : map_) {
            r.map_[b] = a;
        }
        return r;
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs() const
    {
        return {map_.begin(), map_.end()};
    }

    std::string to_cycles() const
    {
        std::string s;
        std::set<std::uint32_t> done;
        for (auto [a, b] : map_) {
            if (done.count(a) != 0) {
                continue;
            }
            s += '(';
            std::uint32_t x = a;
            bool first = true;
            do {
                s += (first ? "" : " ") + std::to_string(x);
                first = false;
                done.insert(x);
                x = (*this)(x);
            } while (x != a);
            s += ')';
        }
        return s.empty() ? "()" : s;
    }

    friend bool operator==(const DigitPerm &a, const DigitPerm &b) noexcept
    {
        return a.map_ == b.map_;
    }

private:
    void prune()
    {
        for (auto it = map_.begin(); it != map_.end();) {
            it = it->first == it->second ? map_.erase(it) : std::next(it);
        }
    }

    std::map<std::uint32_t, std::uint32_t> map_;
};

/// Uniform permutation of {0, ..., n-1} (identity elsewhere).
template <class Rng>
DigitPerm random_digit_perm(Rng &rng, std::uint32_t n)
{
    std::vector<std::uint32_t> v(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        v[i] = i;
    }
    for (std::uint32_t i = n; i > 1; --i) {
        const auto k = static_cast<std::uint32_t>(rng() % i);
        std::swap(v[i - 1], v[k]);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < n; ++i) {
        pairs.emplace_back(i, v[i]);
    }
    return DigitPerm(pairs);
}

/// rho_*(x) = sum c_i q^rho(i).
inline PAdic rho_star(const DigitPerm &rho, const PAdic &x)
{
    const std::size_t n = std::max<std::size_t>(x.digits().size(), rho.support_bound());
    std::vector<std::uint32_t> d(n, x.tail());
    for (std::size_t i = 0; i < n; ++i) {
        d[rho(static_cast<std::uint32_t>(i))] = x.digit(i);
    }
    return PAdic(x.base(), std::move(d), x.tail());
}

inline long long rho_star(const DigitPerm &rho, long long n, std::uint32_t q)
{
    return rho_star(rho, PAdic::from_int(q, n)).to_int_checked();
}

/// rho-hat_*(x) = -rho_*(-x).
inline PAdic rho_hat_star(const DigitPerm &rho, const PAdic &x)
{
    return -rho_star(rho, -x);
}

/// q-adic collapse: the nonzero digits slide down, in order, to positions 0, 1, ...
inline PAdic collapse(const PAdic &y)
{
    if (!y.is_nonnegative_integer()) {
        throw domain_error("q-adic collapse needs finitely many nonzero digits");
    }
    std::vector<std::uint32_t> d;
    for (auto c : y.digits()) {
        if (c != 0) {
            d.push_back(c);
        }
    }
    return PAdic(y.base(), std::move(d), 0);
}

/// Positions e_0 < e_1 < ... of the nonzero digits of a nonnegative integer.
inline std::vector<std::uint32_t> nonzero_positions(const PAdic &y)
{
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < y.digits().size(); ++i) {
        if (y.digits()[i] != 0) {
            out.push_back(static_cast<std::uint32_t>(i));
        }
    }
    return out;
}

/// Extends the partial injection src[k] -> dst[k] to a finite-support permutation.
inline DigitPerm complete_permutation(const std::vector<std::uint32_t> &src, const std::vector<std::uint32_t> &dst)
{
    if (src.size() != dst.size()) {
        throw domain_error("partial permutation with mismatched lengths");
    }
    std::uint32_t bound = 0;
    for (auto v : src) {
        bound = std::max(bound, v + 1);
    }
    for (auto v : dst) {
        bound = std::max(bound, v + 1);
    }
    std::vector<bool> used_src(bound, false);
    std::vector<bool> used_dst(bound, false);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::size_t k = 0; k < src.size(); ++k) {
        pairs.emplace_back(src[k], dst[k]);
        used_src[src[k]] = true;
        used_dst[dst[k]] = true;
    }
    std::vector<std::uint32_t> free_src;
    std::vector<std::uint32_t> free_dst;
    for (std::uint32_t i = 0; i < bound; ++i) {
        if (!used_src[i]) {
            free_src.push_back(i);
        }
        if (!used_dst[i]) {
            free_dst.push_back(i);
        }
    }
    for (std::size_t k = 0; k < free_src.size(); ++k) {
        pairs.emplace_back(free_src[k], free_dst[k]);
    }
    return DigitPerm(pairs);
}

/// The permutation rho with rho(i) = e_i sending the collapse of y back to y.
inline DigitPerm collapse_permutation(const PAdic &y)
{
    const auto pos = nonzero_positions(y);
    std::vector<std::uint32_t> src(pos.size());
    for (std::size_t k = 0; k < pos.size(); ++k) {
        src[k] = static_cast<std::uint32_t>(k);
    }
    return complete_permutation(src, pos);
}

// ---- orbits of the finite-support group S_(q) ----

/// Sorted multiset of digits different from the tail (the orbit invariant).
inline std::vector<std::uint32_t> digit_multiset(const PAdic &x)
{
    std::vector<std::uint32_t> d;
    for (auto c : x.digits()) {
        if (c != x.tail()) {
            d.push_back(c);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

inline bool same_orbit(const PAdic &a, const PAdic &b)
{
    return a.base() == b.base() && a.tail() == b.tail() && digit_multiset(a) == digit_multiset(b);
}

/// Orbit representative: non-tail digits packed into the lowest positions, largest first.
inline PAdic canonical_rep(const PAdic &x)
{
    auto d = digit_multiset(x);
    std::reverse(d.begin(), d.end());
    return PAdic(x.base(), std::move(d), x.tail());
}

/// A finite-support rho with rho_*(a) = b, or nullopt if a and b lie in different orbits.
inline std::optional<DigitPerm> orbit_witness(const PAdic &a, const PAdic &b)
{
    if (!same_orbit(a, b)) {
        return std::nullopt;
    }
    // Pair positions carrying equal digit values, in increasing position order.
    std::map<std::uint32_t, std::vector<std::uint32_t>> pa;
    std::map<std::uint32_t, std::vector<std::uint32_t>> pb;
    for (std::size_t i = 0; i < a.digits().size(); ++i) {
        if (a.digits()[i] != a.tail()) {
            pa[a.digits()[i]].push_back(static_cast<std::uint32_t>(i));
        }
    }
    for (std::size_t i = 0; i < b.digits().size(); ++i) {
        if (b.digits()[i] != b.tail()) {
            pb[b.digits()[i]].push_back(static_cast<std::uint32_t>(i));
        }
    }
    std::vector<std::uint32_t> src;
    std::vector<std::uint32_t> dst;
    for (auto &[digit, positions] : pa) {
        const auto &target = pb[digit];
        src.insert(src.end(), positions.begin(), positions.end());
        dst.insert(dst.end(), target.begin(), target.end());
    }
    // Tail-valued positions below the explicit length must land on tail-valued positions.
    return complete_permutation(src, dst);
}

/// Nonnegative members of the orbit of n below `bound`, ascending.
inline std::vector<long long> orbit_members(long long n, std::uint32_t q, long long bound)
{
    if (n < 0) {
        throw domain_error("orbit enumeration is implemented for nonnegative integers");
    }
    const auto key = digit_multiset(PAdic::from_int(q, n));
    std::vector<long long> out;
    for (long long m = 0; m < bound; ++m) {
        if (digit_multiset(PAdic::from_int(q, m)) == key) {
            out.push_back(m);
        }
    }
    return out;
}

/// X(q, c) membership: positive integers with digit sum c.
inline bool in_digit_sum_class(long long n, std::uint32_t q, std::uint64_t c)
{
    return n > 0 && digit_sum(static_cast<std::uint64_t>(n), q) == c;
}

/// Canonical representatives of the orbits meeting X(q, c) below `bound`.
inline std::vector<long long> digit_sum_class_orbits(std::uint32_t q, std::uint64_t c, long long bound)
{
    std::set<long long> reps;
    for (long long m = 1; m < bound; ++m) {
        if (in_digit_sum_class(m, q, c)) {
            reps.insert(canonical_rep(PAdic::from_int(q, m)).to_int_checked());
        }
    }
    return {reps.begin(), reps.end()};
}

} // namespace fzeta

#endif
