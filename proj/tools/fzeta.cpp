// fzeta: command-line driver for the zeta, zeros, Carlitz, classical, digit and
// measure computations. Results go to stdout as JSON (or CSV for tables);
// the exit code is 0 when every check passed, 1 when one failed, 2 on usage errors.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fzeta/carlitz.hpp>
#include <fzeta/classical.hpp>
#include <fzeta/json.hpp>
#include <fzeta/measures.hpp>
#include <fzeta/scan.hpp>
#include <fzeta/verify.hpp>
#include <fzeta/zeros.hpp>
#include <fzeta/zeta.hpp>

using namespace fzeta;

namespace
{

constexpr const char *artifact_version = "fzeta 0.1.0";

struct Options
{
    std::uint32_t q = 2;
    std::string ring = "fqT";
    std::uint64_t j = 0;
    std::optional<std::uint64_t> j_max;
    std::uint64_t to = 0;
    long prec = 32;
    std::size_t samples = 64;
    std::uint64_t seed = 1;
    std::string format = "json";
    bool timing = false;
    unsigned e = 1;
    std::string v = "T";
    unsigned d = 3;
    unsigned terms = 4;
    unsigned nmax = 120;
    std::vector<unsigned> primes = {3, 5, 7, 11};
    std::string perm = "()";
    long long y = 0;
    long ell = -1;
    bool scan = false;
    std::uint32_t p = 3;
    unsigned trials = 500;
    std::uint64_t window = 243;
    std::string level = "desk";
    long root = -1;
};

struct Output
{
    json result = json::object();
    json ranges = json::object();
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    bool uses_seed = false;
    bool uses_prec = false;
};

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

const Fq &field_for(std::uint32_t q)
{
    if (!prime_power(q)) {
        throw UsageError("--q " + std::to_string(q) + " is not a prime power");
    }
    try {
        return Fq::get(q);
    } catch (const domain_error &e) {
        throw UsageError(e.what());
    }
}

void need_prec(const Options &o)
{
    if (o.prec < 2) {
        throw UsageError("--prec must be at least 2");
    }
}

void need_elliptic_q(const Options &o)
{
    if (o.ring == "elliptic2" && o.q != 2) {
        throw UsageError("the elliptic2 ring is defined over F_2; use --q 2");
    }
}

std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string r = "\"";
    for (char c : s) {
        r += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return r + "\"";
}

json poly_list(const std::vector<Poly> &cs, const std::string &var = "T")
{
    json out = json::array();
    for (const auto &c : cs) {
        out.push_back(poly_text_json(c, var));
    }
    return out;
}

std::string render_zero(const ZeroRecord &z)
{
    return z.exact ? z.x.to_string(false) : z.x.to_string(true);
}

// ---- zeta ----------------------------------------------------------------

void zeta_special_poly(const Options &o, Output &out)
{
    need_elliptic_q(o);
    out.ranges["j"] = o.j;
    out.csv_header = {"e", "S_e(j)"};
    if (o.ring == "elliptic2") {
        const auto sp = special_poly(Elliptic2Ring(), o.j);
        json cs = json::array();
        for (std::size_t e = 0; e < sp.coeffs.size(); ++e) {
            cs.push_back(sp.coeffs[e].to_string());
            out.csv_rows.push_back({std::to_string(e), sp.coeffs[e].to_string()});
        }
        out.result = {{"j", o.j}, {"degree", sp.degree()}, {"cutoff", sp.cutoff}, {"coeffs", cs}};
        out.checks.push_back({"stopping rule reached", sp.cutoff > 0});
        return;
    }
    const Fq &f = field_for(o.q);
    const auto sp = special_poly(PolyRing(f), o.j);
    std::vector<Poly> norm;
    for (std::size_t e = 0; e < sp.coeffs.size(); ++e) {
        norm.push_back(detail::scaled_coeff(sp.coeffs[e], e * o.j));
        out.csv_rows.push_back({std::to_string(e), sp.coeffs[e].to_string()});
    }
    out.result = {{"j", o.j},
                  {"degree", sp.degree()},
                  {"degree_formula", degree_formula(o.j, o.q)},
                  {"coeffs", poly_list(sp.coeffs)},
                  {"normalized", poly_list(norm, "pi")}};
    out.checks.push_back({"degree equals the digit formula", sp.degree() == static_cast<long>(degree_formula(o.j, o.q))});
}

void zeta_trivial_order(const Options &o, Output &out)
{
    need_elliptic_q(o);
    out.ranges["j"] = o.j;
    unsigned order = 0;
    if (o.ring == "elliptic2") {
        order = trivial_zero_order(special_poly(Elliptic2Ring(), o.j));
    } else {
        order = trivial_zero_order(special_poly(PolyRing(field_for(o.q)), o.j));
    }
    const bool forced = o.j > 0 && o.j % (o.q - 1) == 0;
    out.result = {{"j", o.j}, {"order", order}, {"lower_bound", forced ? 1 : 0}, {"regular", order == (forced ? 1u : 0u)}};
    out.checks.push_back({"order at least the lower bound", order >= (forced ? 1u : 0u)});
    if (o.ring == "fqT" && forced) {
        out.checks.push_back({"trivial zero is simple over F_q[T]", order == 1});
    }
}

void zeta_vadic(const Options &o, Output &out)
{
    const Fq &f = field_for(o.q);
    const PolyRing ring(f);
    const Poly v = Poly::parse(f, o.v);
    out.ranges["j"] = o.j;
    out.ranges["e"] = o.e;
    try {
        const Poly a = vadic_power_sum(ring, o.e, v, o.j);
        const Poly b = vadic_power_sum_by_removal(ring, o.e, v, o.j);
        out.result = {{"v", v.to_string()}, {"e", o.e}, {"i", o.j}, {"value", poly_text_json(a)},
                      {"by_removal", poly_text_json(b)}};
        out.checks.push_back({"both v-adic routes agree", a == b});
    } catch (const domain_error &e) {
        throw UsageError(e.what());
    }
}

void zeta_pos_cmd(const Options &o, Output &out)
{
    need_prec(o);
    out.uses_prec = true;
    out.ranges["j"] = o.j;
    try {
        const Laurent z = fzeta::zeta_pos(PolyRing(field_for(o.q)), o.j, o.prec);
        out.result = {{"j", o.j}, {"value", to_json(z)}};
        out.checks.push_back({"constant term is 1", !z.is_zero() && z.ord() == 0 && z.lead() == 1});
    } catch (const domain_error &e) {
        throw UsageError(e.what());
    }
}

// ---- zeros ---------------------------------------------------------------

void zeros_find(const Options &o, Output &out)
{
    need_prec(o);
    out.uses_prec = true;
    out.ranges["j"] = o.j;
    const auto sp = special_poly(PolyRing(field_for(o.q)), o.j);
    const auto np = newton_polygon(sp);
    json slopes = json::array();
    for (const auto &s : np.segments) {
        slopes.push_back({{"from", s.e0}, {"to", s.e1}, {"slope", s.slope()}, {"integral", s.integral()}});
    }
    out.result = {{"j", o.j}, {"degree", sp.degree()}, {"segments", slopes}};
    out.checks.push_back({"slopes distinct", np.separated()});
    try {
        auto zs = roots_in_K(sp, o.prec);
        std::reverse(zs.begin(), zs.end());
        json roots = json::array(), detail_ = json::array();
        out.csv_header = {"ord", "exact", "x"};
        for (const auto &z : zs) {
            roots.push_back(render_zero(z));
            detail_.push_back({{"ord", z.ord}, {"exact", z.exact}, {"y0", to_json(z.y0)}, {"x", to_json(z.x)}});
            out.csv_rows.push_back({std::to_string(z.ord), z.exact ? "true" : "false", render_zero(z)});
        }
        out.result["roots"] = roots;
        out.result["zeros"] = detail_;
        out.checks.push_back({"roots simple", true});
    } catch (const error &e) {
        out.result["error"] = e.what();
        out.checks.push_back({"roots simple", false});
    }
}

void zeros_gauge(const Options &o, Output &out)
{
    need_prec(o);
    out.uses_prec = out.uses_seed = true;
    out.ranges["j"] = o.j;
    const auto zs = roots_in_K(special_poly(PolyRing(field_for(o.q)), o.j), o.prec);
    json rows = json::array();
    out.csv_header = {"root", "ord", "prefix_length", "prefix"};
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (o.root >= 0 && static_cast<std::size_t>(o.root) != i) {
            continue;
        }
        const auto r = invariant_prefix(zs[i], o.samples, o.prec, o.seed);
        rows.push_back({{"root", render_zero(zs[i])}, {"ord", zs[i].ord}, {"prefix_length", r.length},
                        {"prefix", r.prefix.to_string()}});
        out.csv_rows.push_back({render_zero(zs[i]), std::to_string(zs[i].ord), std::to_string(r.length),
                                r.prefix.to_string()});
        out.checks.push_back({"leading term invariant (root " + std::to_string(i) + ")", r.length >= 1});
    }
    out.result = {{"j", o.j}, {"samples", o.samples}, {"prefixes", rows}};
}

void zeros_orbit(const Options &o, Output &out)
{
    need_prec(o);
    out.uses_prec = out.uses_seed = true;
    out.ranges["j"] = o.j;
    out.ranges["to"] = o.to;
    PowerSumCache cache(field_for(o.q));
    OrbitReport r;
    try {
        r = orbit_compare(o.j, o.to, o.prec, o.samples, o.seed, cache);
    } catch (const domain_error &e) {
        throw UsageError(e.what());
    }
    json rows = json::array();
    for (const auto &row : r.rows) {
        rows.push_back({{"source", render_zero(row.source)}, {"image", row.image.x.to_string()},
                        {"target", render_zero(row.target)}, {"compared", row.compared}, {"agrees", row.agrees}});
    }
    out.result = {{"j", o.j}, {"to", o.to}, {"rho", to_json(r.rho)}, {"rows", rows}};
    out.checks.push_back({"moved zeros agree on invariant windows", r.all_agree()});
}

void zeros_collapse(const Options &o, Output &out)
{
    out.ranges["j"] = o.j;
    PowerSumCache cache(field_for(o.q));
    CollapseReport r;
    try {
        r = collapse_compare(o.j, o.q, cache);
    } catch (const domain_error &e) {
        throw UsageError(e.what());
    }
    out.result = {{"j", o.j}, {"collapse", r.jc}, {"rho", to_json(r.rho)}, {"ords_collapse", r.ords_jc},
                  {"mapped", r.mapped}, {"ords_j", r.ords_j}};
    out.checks.push_back({"ords move by rho_*", r.holds});
}

// ---- carlitz -------------------------------------------------------------

void carlitz_vsc(const Options &o, Output &out)
{
    const std::uint64_t jm = o.j_max.value_or(60);
    out.ranges["j_max"] = jm;
    field_for(o.q);
    const auto t = vsc_verify(jm, o.q);
    json rows = json::array();
    out.csv_header = {"j", "predicted", "computed", "match"};
    for (const auto &r : t.rows) {
        rows.push_back({{"j", r.j}, {"predicted", r.predicted.to_string()}, {"computed", r.computed.to_string()},
                        {"match", r.match}});
        out.csv_rows.push_back({std::to_string(r.j), r.predicted.to_string(), r.computed.to_string(),
                                r.match ? "true" : "false"});
    }
    std::size_t constant = 0;
    for (const auto &g : t.orbits) {
        constant += g.constant;
    }
    out.result = {{"rows", rows}, {"orbit_groups", t.orbits.size()}, {"orbit_groups_constant", constant}};
    out.checks.push_back({"denominators match prediction",
                          std::all_of(t.rows.begin(), t.rows.end(), [](const VscRow &r) { return r.match; })});
    out.checks.push_back({"valuations constant on digit orbits", constant == t.orbits.size()});
}

void carlitz_factorial_val(const Options &o, Output &out)
{
    const Fq &f = field_for(o.q);
    out.ranges["j"] = o.j;
    out.ranges["d"] = o.d;
    const Poly pj = carlitz_factorial(f, o.j);
    json rows = json::array();
    bool ok = true;
    out.csv_header = {"prime", "degree", "formula", "direct"};
    for (unsigned d = 1; d <= o.d; ++d) {
        for (const auto &P : monic_irreducibles(f, d)) {
            const auto a = factorial_valuation(o.j, d, o.q);
            const auto b = valuation(pj, P);
            ok = ok && a == b;
            rows.push_back({{"prime", P.to_string()}, {"degree", d}, {"formula", a}, {"direct", b}});
            out.csv_rows.push_back({P.to_string(), std::to_string(d), std::to_string(a), std::to_string(b)});
        }
    }
    out.result = {{"j", o.j}, {"factorial_degree", pj.deg()}, {"valuations", rows}};
    out.checks.push_back({"closed form equals direct count", ok});
}

void carlitz_explog(const Options &o, Output &out)
{
    const Fq &f = field_for(o.q);
    out.ranges["terms"] = o.terms;
    const auto s = carlitz_exp_log(f, o.terms);
    const auto comp = log_after_exp(s);
    json ex = json::array(), lg = json::array();
    bool inv = true, integral = true;
    for (unsigned k = 0; k <= o.terms; ++k) {
        ex.push_back(s.exp[k].to_string());
        lg.push_back(s.log[k].to_string());
        inv = inv && comp[k] == (k == 0 ? RatFun(Poly::one(f)) : RatFun(f));
        integral = integral && (RatFun(carlitz_D(f, k)) * s.exp[k]).is_polynomial() &&
                   (RatFun(carlitz_L(f, k)) * s.log[k]).is_polynomial();
    }
    out.result = {{"exp", ex}, {"log", lg}};
    out.checks.push_back({"log(exp(z)) = z", inv});
    out.checks.push_back({"D_i e_i and L_i l_i are polynomials", integral});
}

// ---- classical -----------------------------------------------------------

void classical_verify(const Options &o, Output &out)
{
    if (o.nmax < 2) {
        throw UsageError("--nmax must be at least 2");
    }
    out.ranges["nmax"] = o.nmax;
    out.ranges["primes"] = o.primes;
    const BernoulliCache B(std::max(o.nmax, 10u));
    unsigned den = 0, den_ok = 0, adams = 0, adams_ok = 0, kummer = 0, kummer_ok = 0, euler = 0, euler_ok = 0;
    for (unsigned n = 2; n <= o.nmax; n += 2) {
        ++den;
        den_ok += BigInt(denominator(B(n))) == vsc_classical(n);
    }
    for (unsigned p : o.primes) {
        if (!is_prime(p) || p == 2) {
            throw UsageError("--primes takes odd primes");
        }
        for (unsigned n = 2; n <= o.nmax; n += 2) {
            if (n % (p - 1) != 0) {
                ++adams;
                adams_ok += adams_check(B, n, p);
            }
        }
        for (unsigned b = 1; b <= 2; ++b) {
            const unsigned mod = (b == 1 ? 1 : p) * (p - 1);
            for (unsigned i = 2; i <= o.nmax; i += 2) {
                if (i % (p - 1) == 0) {
                    continue;
                }
                for (unsigned j = i + mod; j <= o.nmax; j += mod) {
                    ++kummer;
                    kummer_ok += kummer_check(B, i, j, p, b);
                }
            }
        }
    }
    json stab = json::array();
    bool stab_ok = true;
    out.csv_header = {"p", "n", "t", "modulus", "window", "failures", "digit_orbit_hits"};
    for (unsigned p : o.primes) {
        for (unsigned n = 2; n <= std::min(60u, o.nmax); n += 2) {
            const auto r = stability_check(B, n, p);
            stab_ok = stab_ok && r.ok();
            stab.push_back({{"p", p}, {"n", n}, {"t", r.t}, {"modulus", r.modulus}, {"window", r.window.size()},
                            {"failures", r.failures}, {"digit_orbit_hits", r.digit_orbit_hits}});
            out.csv_rows.push_back({std::to_string(p), std::to_string(n), std::to_string(r.t),
                                    std::to_string(r.modulus), std::to_string(r.window.size()),
                                    std::to_string(r.failures.size()), std::to_string(r.digit_orbit_hits)});
        }
    }
    for (unsigned n = 2; n <= std::min(40u, o.nmax); ++n) {
        ++euler;
        euler_ok += euler_ratio_check(B, n);
    }
    const bool counter = valuations_differ(B, 2, 10, 5);
    out.result = {{"denominators", {{"checked", den}, {"ok", den_ok}}},
                  {"adams", {{"checked", adams}, {"ok", adams_ok}}},
                  {"kummer", {{"checked", kummer}, {"ok", kummer_ok}}},
                  {"stability", stab},
                  {"weak_congruence_counterexample", {{"p", 5}, {"n", 2}, {"m", 10}, {"valuations_differ", counter}}},
                  {"euler", {{"checked", euler}, {"ok", euler_ok}}}};
    out.checks.push_back({"denominators are von Staudt-Clausen products", den == den_ok});
    out.checks.push_back({"Adams congruence", adams == adams_ok});
    out.checks.push_back({"Kummer congruence", kummer == kummer_ok});
    out.checks.push_back({"valuation stable on the p-adic window", stab_ok});
    out.checks.push_back({"weaker congruence fails at p=5 n=2 m=10", counter});
    out.checks.push_back({"Euler ratio identity", euler == euler_ok});
}

// ---- digits --------------------------------------------------------------

void scan_output(const OrbitScan &s, Output &out, bool poly)
{
    json rows = json::array();
    out.csv_header = {"j", "ell", "order", "orbit", "degree", "cutoff", "irregular"};
    for (const auto &r : s.rows) {
        rows.push_back({{"j", r.j}, {"ell", r.ell}, {"order", r.order}, {"orbit", r.orbit}, {"degree", r.degree},
                        {"cutoff", r.cutoff}, {"irregular", r.irregular}});
        out.csv_rows.push_back({std::to_string(r.j), std::to_string(r.ell), std::to_string(r.order), r.orbit,
                                std::to_string(r.degree), std::to_string(r.cutoff), r.irregular ? "true" : "false"});
    }
    json orbits = json::array();
    for (const auto &g : s.orbits) {
        orbits.push_back({{"orbit", g.orbit}, {"members", g.members.size()}, {"orders", g.orders},
                          {"consistency", g.consistent ? "consistent" : "inconsistent"}});
    }
    json table = json::object();
    for (const auto &[ell, m] : s.ell_vs_order) {
        json row = json::object();
        for (const auto &[ord, c] : m) {
            row[std::to_string(ord)] = c;
        }
        table[std::to_string(ell)] = row;
    }
    out.result = {{"ring", s.ring}, {"rows", rows}, {"orbits", orbits}, {"ell_vs_order", table}};
    out.checks.push_back({"order constant on every orbit", s.all_consistent()});
    if (poly) {
        out.checks.push_back({"every trivial zero simple", s.all_regular()});
    }
}

void digits_orbit(const Options &o, Output &out)
{
    need_elliptic_q(o);
    if (o.scan) {
        const std::uint64_t jm = o.j_max.value_or(128);
        out.ranges["j_max"] = jm;
        if (o.ell >= 0) {
            out.ranges["ell"] = o.ell;
        }
        if (o.ring == "elliptic2") {
            scan_output(orbit_scan_elliptic(jm, o.ell), out, false);
        } else {
            field_for(o.q);
            scan_output(orbit_scan_poly(o.q, jm, o.ell), out, true);
        }
        return;
    }
    field_for(o.q);
    const std::uint64_t jm = o.j_max.value_or(std::max<std::uint64_t>(o.j, 1) * o.q * o.q);
    out.ranges["j"] = o.j;
    out.ranges["j_max"] = jm;
    const auto members = orbit_members(static_cast<long long>(o.j), o.q, static_cast<long long>(jm));
    const PAdic y = PAdic::from_int(o.q, static_cast<long long>(o.j));
    out.result = {{"j", o.j}, {"digit_sum", ell_q(y)}, {"orbit", digit_orbit_id(o.j, o.q)},
                  {"canonical", canonical_rep(y).to_int_checked()}, {"members", members}};
    out.csv_header = {"member"};
    bool same = true;
    for (auto m : members) {
        out.csv_rows.push_back({std::to_string(m)});
        same = same && ell_q(PAdic::from_int(o.q, m)) == ell_q(y);
    }
    out.checks.push_back({"members share the digit sum", same});
}

void digits_act(const Options &o, Output &out)
{
    field_for(o.q);
    DigitPerm rho;
    try {
        rho = DigitPerm::parse_cycles(o.perm);
    } catch (const std::exception &e) {
        throw UsageError(std::string("--perm: ") + e.what());
    }
    const PAdic y = PAdic::from_int(o.q, o.y);
    const PAdic a = rho_star(rho, y), h = rho_hat_star(rho, y);
    out.ranges["y"] = o.y;
    out.result = {{"perm", to_json(rho)}, {"y", to_json(y)}, {"rho_star", to_json(a)}, {"rho_hat_star", to_json(h)}};
    if (auto v = a.to_int(); v) {
        out.result["rho_star_int"] = *v;
    }
    if (auto v = h.to_int(); v) {
        out.result["rho_hat_star_int"] = *v;
    }
    out.checks.push_back({"inverse undoes the action", rho_star(rho.inverse(), a) == y});
}

// ---- measures ------------------------------------------------------------

void measures_selftest_cmd(const Options &o, Output &out)
{
    out.uses_seed = true;
    out.ranges["p"] = o.p;
    out.ranges["trials"] = o.trials;
    out.ranges["window"] = o.window;
    MeasureSelfTest r;
    try {
        r = measures_selftest(o.p, o.trials, o.window, o.seed);
    } catch (const domain_error &e) {
        throw UsageError(e.what());
    }
    out.result = {{"p", r.p},           {"window", r.window},
                  {"trials", r.trials}, {"binomial", r.binom},
                  {"carry", r.carry},   {"additive", r.additive},
                  {"multiplicative", r.multiplicative}, {"composition", r.composition}};
    out.checks.push_back({"binomial symmetry", r.binom == r.trials});
    out.checks.push_back({"carry symmetry", r.carry == r.trials});
    out.checks.push_back({"automorphism additive", r.additive == r.trials});
    out.checks.push_back({"automorphism multiplicative", r.multiplicative == r.trials});
    out.checks.push_back({"action respects composition", r.composition == r.trials});
}

// ---- verify --------------------------------------------------------------

void verify_all(const Options &o, Output &out)
{
    if (o.level != "desk") {
        throw UsageError("--level supports only desk");
    }
    const auto checks = desk_checks();
    json rows = json::array();
    out.csv_header = {"criterion", "name", "status", "detail"};
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = run_check(static_cast<int>(i + 1), checks[i]);
        if (o.timing) {
            std::cerr << "criterion " << r.id << ": "
                      << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
        }
        rows.push_back({{"criterion", r.id}, {"name", r.name}, {"status", r.passed ? "PASS" : "FAIL"},
                        {"exploratory", r.exploratory}, {"detail", r.detail}, {"report", r.report}});
        out.csv_rows.push_back({std::to_string(r.id), r.name, r.passed ? "PASS" : "FAIL", r.detail});
        out.checks.push_back({"criterion " + std::to_string(r.id), r.passed});
    }
    out.result = {{"level", o.level}, {"criteria", rows}};
}

// ---- driver --------------------------------------------------------------

int emit(const std::string &command, const Options &o, const Output &out)
{
    bool ok = true;
    json checks = json::array();
    for (const auto &[name, pass] : out.checks) {
        checks.push_back({{"name", name}, {"passed", pass}});
        ok = ok && pass;
    }
    if (o.format == "csv") {
        if (out.csv_header.empty()) {
            std::cerr << "error: " << command << " has no tabular output; use --format json\n";
            return 2;
        }
        std::ostringstream os;
        for (std::size_t i = 0; i < out.csv_header.size(); ++i) {
            os << (i ? "," : "") << csv_escape(out.csv_header[i]);
        }
        os << "\n";
        for (const auto &row : out.csv_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "," : "") << csv_escape(row[i]);
            }
            os << "\n";
        }
        std::cout << os.str();
    } else {
        json manifest = {{"command", command}, {"ring", o.ring}, {"q", o.q}, {"ranges", out.ranges}};
        manifest["seed"] = out.uses_seed ? json(o.seed) : json(nullptr);
        manifest["precision"] = out.uses_prec ? json(o.prec) : json(nullptr);
        manifest["version"] = artifact_version;
        manifest["checks"] = checks;
        manifest["passed"] = ok;
        const json doc = {{"manifest", manifest}, {"result", out.result}};
        std::cout << doc.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

struct Command
{
    std::string path;
    std::function<void(const Options &, Output &)> run;
};

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Goss zeta functions in positive characteristic: special polynomials, zeros, digit "
                 "permutations, Carlitz and classical Bernoulli numbers, divided power automorphisms"};
    app.require_subcommand(1);
    Options o;
    std::vector<Command> commands;
    std::string chosen;
    std::function<void(const Options &, Output &)> handler;

    auto add_common = [&](CLI::App *s) {
        s->add_option("--q", o.q, "field size, a prime power")->check(CLI::Range(2u, 1u << 16));
        s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
        s->add_flag("--timing", o.timing, "print elapsed time to stderr");
    };
    auto leaf = [&](CLI::App *group, const std::string &name, const std::string &help,
                    std::function<void(const Options &, Output &)> fn) {
        CLI::App *s = group->add_subcommand(name, help);
        add_common(s);
        const std::string path = group->get_name() + " " + name;
        s->callback([&, path, fn] {
            chosen = path;
            handler = fn;
        });
        return s;
    };
    auto ring_opt = [&](CLI::App *s) {
        s->add_option("--ring", o.ring, "coefficient ring A")->check(CLI::IsMember({"fqT", "elliptic2"}));
    };
    auto j_opt = [&](CLI::App *s, bool required = true) {
        auto *opt = s->add_option("--j", o.j, "nonnegative integer j");
        if (required) {
            opt->required();
        }
    };
    auto prec_opt = [&](CLI::App *s) { s->add_option("--prec", o.prec, "terms of precision in pi")->capture_default_str(); };
    auto seed_opts = [&](CLI::App *s) {
        s->add_option("--samples", o.samples, "number of random samples");
        s->add_option("--seed", o.seed, "seed for mt19937_64");
    };

    CLI::App *zeta = app.add_subcommand("zeta", "Goss zeta values at integers and the power sums S_e(j)");
    zeta->require_subcommand(1);
    {
        auto *s = leaf(zeta, "special-poly",
                       "special polynomial z(x,-j) = sum_e S_e(j) x^-e of the Goss zeta function at -j",
                       zeta_special_poly);
        ring_opt(s);
        j_opt(s);
        s = leaf(zeta, "trivial-order", "order of the trivial zero of zeta at -j (Hasse derivatives of z at x = 1)",
                 zeta_trivial_order);
        ring_opt(s);
        j_opt(s);
        s = leaf(zeta, "vadic", "v-adic power sum over monics prime to v, by two independent routes", zeta_vadic);
        j_opt(s);
        s->add_option("--e", o.e, "degree e");
        s->add_option("--v", o.v, "monic irreducible v, e.g. T+1");
        s = leaf(zeta, "pos", "zeta(j) = sum over monic f of f^-j as a series in pi = 1/T", zeta_pos_cmd);
        j_opt(s);
        prec_opt(s);
    }

    CLI::App *zeros = app.add_subcommand("zeros", "zeros of the Goss zeta function in F_q((pi)) x Z_p");
    zeros->require_subcommand(1);
    {
        auto *s = leaf(zeros, "find", "Newton polygon and zeros of z(x,-j), refined by Newton's method", zeros_find);
        j_opt(s);
        prec_opt(s);
        s = leaf(zeros, "gauge", "gauge-invariant prefix of each zero under random changes of uniformizer",
                 zeros_gauge);
        j_opt(s);
        prec_opt(s);
        seed_opts(s);
        s->add_option("--root", o.root, "only this root index (increasing ord)");
        s = leaf(zeros, "orbit", "digit-permutation action moving the zeros of z(x,-j) to those of z(x,-to)",
                 zeros_orbit);
        j_opt(s);
        s->add_option("--to", o.to, "target in the digit orbit of j")->required();
        prec_opt(s);
        seed_opts(s);
        s = leaf(zeros, "collapse", "q-adic collapse: root ords of z(x,-j) against those of the collapsed index",
                 zeros_collapse);
        j_opt(s);
    }

    CLI::App *carlitz = app.add_subcommand("carlitz", "Carlitz module: factorials, exp/log, Bernoulli-Carlitz numbers");
    carlitz->require_subcommand(1);
    {
        auto *s = leaf(carlitz, "vsc", "von Staudt-Clausen denominators of Bernoulli-Carlitz numbers", carlitz_vsc);
        s->add_option("--j-max", o.j_max, "largest j");
        s = leaf(carlitz, "factorial-val", "valuations of the Carlitz factorial Pi_j at primes of degree <= d",
                 carlitz_factorial_val);
        j_opt(s);
        s->add_option("--d", o.d, "largest prime degree");
        s = leaf(carlitz, "explog", "coefficients of the Carlitz exponential and logarithm", carlitz_explog);
        s->add_option("--terms", o.terms, "coefficients up to z^(q^terms)");
    }

    CLI::App *classical = app.add_subcommand("classical", "classical Bernoulli numbers and their p-adic congruences");
    classical->require_subcommand(1);
    {
        auto *s = leaf(classical, "verify",
                       "von Staudt-Clausen, Adams, Kummer, p-adic stability windows and Euler's ratio",
                       classical_verify);
        s->add_option("--nmax", o.nmax, "largest index n");
        s->add_option("--primes", o.primes, "odd primes, comma separated")->delimiter(',');
    }

    CLI::App *digits = app.add_subcommand("digits", "digit-permutation group S_(q) acting on Z_p");
    digits->require_subcommand(1);
    {
        auto *s = leaf(digits, "orbit",
                       "digit orbit of j, or with --scan the trivial-zero order scan grouped by digit orbit",
                       digits_orbit);
        ring_opt(s);
        j_opt(s, false);
        s->add_option("--j-max", o.j_max, "largest j");
        s->add_flag("--scan", o.scan, "scan trivial-zero orders for 1 <= j <= j-max");
        s->add_option("--ell", o.ell, "only j with this digit sum");
        s = leaf(digits, "act", "rho_* and the conjugated action on a q-adic integer", digits_act);
        s->add_option("--perm", o.perm, "permutation of digit positions in cycle notation, e.g. \"(0 1)\"");
        s->add_option("--y", o.y, "integer y")->allow_extra_args(false);
    }

    CLI::App *measures = app.add_subcommand("measures", "divided power series and their digit automorphisms");
    measures->require_subcommand(1);
    {
        auto *s = leaf(measures, "selftest",
                       "randomized check that digit permutations act as divided-power algebra automorphisms",
                       measures_selftest_cmd);
        s->add_option("--p", o.p, "prime p");
        s->add_option("--trials", o.trials, "number of random trials");
        s->add_option("--window", o.window, "truncation window M = p^k");
        s->add_option("--seed", o.seed, "seed for mt19937_64");
    }

    CLI::App *verify = app.add_subcommand("verify", "acceptance checks");
    verify->require_subcommand(1);
    {
        auto *s = leaf(verify, "all", "run every acceptance check and report PASS/FAIL per criterion", verify_all);
        s->add_option("--level", o.level, "desk (the only level)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (!handler) {
        std::cerr << app.help();
        return 2;
    }
    try {
        Output out;
        const auto t0 = std::chrono::steady_clock::now();
        handler(o, out);
        if (o.timing) {
            std::cerr << chosen << ": " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
                      << " s\n";
        }
        return emit(chosen, o, out);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
