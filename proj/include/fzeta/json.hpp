#ifndef FZETA_JSON_HPP
#define FZETA_JSON_HPP

// JSON encodings of the core value types. Needs nlohmann/json; the rest of
// the library does not.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include <fzeta/digit_perm.hpp>
#include <fzeta/fq.hpp>
#include <fzeta/laurent.hpp>
#include <fzeta/padic.hpp>
#include <fzeta/poly.hpp>

namespace fzeta
{

using json = nlohmann::ordered_json;

/// F_q element: its base-p coordinates, lowest first.
inline json to_json(const Fq &f, Fq::elem a)
{
    return f.digits(a);
}

/// Polynomial in T: list of coefficients, lowest degree first.
inline json poly_coeffs_json(const Poly &a)
{
    json out = json::array();
    for (std::size_t k = 0; k <= static_cast<std::size_t>(std::max<long>(a.deg(), 0)); ++k) {
        out.push_back(to_json(a.field(), a.coeff(k)));
    }
    return out;
}

/// Canonical rendering used in results: a constant over a prime field is a
/// JSON integer, everything else the high-to-low string.
inline json poly_text_json(const Poly &a, const std::string &var = "T")
{
    if (a.deg() <= 0 && a.field().q() == a.field().p()) {
        return a.coeff(0);
    }
    return a.to_string(var);
}

/// Truncated Laurent series: {"param", "ord0", "prec", "coeffs"}; coeffs[k] is
/// the coefficient of param^(ord0 + k), and the series is known to O(param^prec).
inline json to_json(const Laurent &x)
{
    json c = json::array();
    for (long k = x.ord(); k < x.abs_prec(); ++k) {
        c.push_back(to_json(x.field(), x.coeff(k)));
    }
    return {{"param", x.param()}, {"ord0", x.ord()}, {"prec", x.abs_prec()}, {"coeffs", c}, {"text", x.to_string()}};
}

/// Digit permutation: the moved points as [from, to] pairs.
inline json to_json(const DigitPerm &r)
{
    json out = json::array();
    for (auto [a, b] : r.pairs()) {
        out.push_back({a, b});
    }
    return out;
}

/// q-adic integer: {"base", "digits", "tail"}; digits lowest first, then the
/// tail digit repeated forever.
inline json to_json(const PAdic &y)
{
    return {{"base", y.base()}, {"digits", y.digits()}, {"tail", y.tail()}};
}

} // namespace fzeta

#endif
