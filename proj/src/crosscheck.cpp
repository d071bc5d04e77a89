#include "pairs/crosscheck.hpp"

#include <atomic>
#include <functional>
#include <random>
#include <thread>

#include "pairs/chambers.hpp"
#include "pairs/cohomology.hpp"
#include "pairs/errors.hpp"
#include "pairs/euler.hpp"
#include "pairs/numerology.hpp"
#include "pairs/poincare.hpp"
#include "pairs/verlinde.hpp"

namespace pairs {

using nlohmann::json;

bool CrosscheckReport::ok() const {
    if (!failures.empty()) return false;
    for (const auto& p : parts) {
        if (!p.ok()) return false;
    }
    return true;
}

json CrosscheckReport::to_json() const {
    json out;
    out["suite"] = suite;
    out["grid"] = grid;
    out["cases"] = cases;
    out["ok"] = ok();
    out["failures"] = failures;
    out["notes"] = notes;
    out["statistics"] = statistics;
    if (!parts.empty()) {
        json arr = json::array();
        for (const auto& p : parts) arr.push_back(p.to_json());
        out["suites"] = std::move(arr);
    }
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ni", "dimv", "poincare", "verlinde", "identities"};
    return names;
}

namespace {

/// Work done at one grid point.
struct Outcome {
    long cases = 0;
    std::vector<json> failures;
    std::map<std::string, long> counters;

    void check(bool good, json detail) {
        ++cases;
        if (!good) failures.push_back(std::move(detail));
    }
};

using Task = std::function<Outcome()>;

/// Runs tasks on a pool; results are merged in task order so that the report
/// is independent of scheduling.
CrosscheckReport run_tasks(std::string name, json grid, const std::vector<Task>& tasks, unsigned jobs) {
    std::vector<Outcome> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
            try {
                results[k] = tasks[k]();
            } catch (const std::exception& e) {
                results[k].cases += 1;
                results[k].failures.push_back({{"task", k}, {"error", e.what()}});
            }
        }
    };
    const unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    CrosscheckReport report;
    report.suite = std::move(name);
    report.grid = std::move(grid);
    for (auto& r : results) {
        report.cases += r.cases;
        for (auto& f : r.failures) report.failures.push_back(std::move(f));
        for (const auto& [k, v] : r.counters) report.statistics[k] += v;
    }
    return report;
}

json point(long g, long d, long m, long n) { return {{"g", g}, {"d", d}, {"m", m}, {"n", n}}; }

std::string s(const Rational& r) { return r.str(); }
std::string s(const Integer& z) { return z.get_str(); }

json poly_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.str());
    return arr;
}

template <class F>
void for_region(const Grid& grid, F&& f) {
    for (long g = 2; g <= grid.gmax; ++g)
        for (long d = 3; d <= grid.dmax; ++d)
            for (long m = 0; m <= grid.mmax; ++m)
                for (long n = 0; n <= grid.nmax; ++n)
                    if (region_holds(g, d, m, n)) f(g, d, m, n);
}

json grid_json(const Grid& grid) {
    return {{"g", {2, grid.gmax}}, {"d", {3, grid.dmax}}, {"m", {0, grid.mmax}}, {"n", {0, grid.nmax}}};
}

// ---------------------------------------------------------------- ni

Outcome ni_point(long g, long d, long m, long n) {
    Outcome out;
    const ChamberSpec spec = ChamberSpec::make(g, d);
    const long b = blowup_level_b(m, n, spec);
    const int gi = static_cast<int>(g);
    const long h = h_exponent(d, m, n);
    out.check(b <= spec.w(), {{"check", "b <= w"}, {"at", point(g, d, m, n)}, {"b", b}, {"w", spec.w()}});
    for (long i = 0; i <= b; ++i) {
        const int ii = static_cast<int>(i);
        const Rational ring = ni_ring(ii, m, n, d, gi);
        const Rational residue = ni_residue(ii, m, n, d, gi);
        const Rational viay = ni_y(ii, m, n, d, gi);
        json at = point(g, d, m, n);
        at["i"] = i;
        out.check(ring == residue && residue == viay,
                  {{"check", "three routes"}, {"at", at}, {"ring", s(ring)}, {"residue", s(residue)}, {"y", s(viay)}});
        out.check(ring.is_integer(), {{"check", "integrality"}, {"at", at}, {"ring", s(ring)}});

        ++out.counters["points"];
        if (ni_residue(ii, m, n, d, gi, {ResidueSign::plus}) != ring) ++out.counters["plus_sign_mismatches"];
        if (h % 2 == 0) {
            ++out.counters["half_exponent_points"];
            if (ni_y(ii, m, n, d, gi, AyExponent::half) != ring) ++out.counters["half_exponent_mismatches"];
        }
    }
    // Truncation stability: doubling the eta window must not move the top term.
    const int top = static_cast<int>(b);
    const Rational base = ni_residue(top, m, n, d, gi);
    const Rational doubled = ni_residue(top, m, n, d, gi, {kDefaultResidueSign, 2 * (top + 2 * g + 2)});
    out.check(base == doubled, {{"check", "eta order doubling"}, {"at", point(g, d, m, n)}, {"i", b}});
    const Rational above = ni_ring(top + 1, m, n, d, gi);
    out.check(above.is_zero(), {{"check", "vanishing above b"}, {"at", point(g, d, m, n)}, {"value", s(above)}});
    return out;
}

CrosscheckReport suite_ni(const Grid& grid, unsigned jobs) {
    std::vector<Task> tasks;
    for_region(grid, [&](long g, long d, long m, long n) { tasks.emplace_back([=] { return ni_point(g, d, m, n); }); });
    CrosscheckReport r = run_tasks("ni", grid_json(grid), tasks, jobs);
    const long pts = r.statistics["points"];
    const long plus_bad = r.statistics["plus_sign_mismatches"];
    const bool minus_ok = r.ok();
    const char* chosen = minus_ok ? "(1-t)" : (plus_bad == 0 ? "(1+t)" : "neither");
    r.notes.push_back("residue denominator sign: " + std::string(chosen) + " selected; (1+t)^(2g-2) disagrees with the ring route at " +
                      std::to_string(plus_bad) + " of " + std::to_string(pts) + " points");
    r.notes.push_back("a(y) exponents: " + std::string(to_string(AyExponent::reconciled)) + " agree with the ring route" +
                      (minus_ok ? " everywhere" : " with failures") + "; the half form q = -h/2 disagrees at " +
                      std::to_string(r.statistics["half_exponent_mismatches"]) + " of " +
                      std::to_string(r.statistics["half_exponent_points"]) + " even-h points");
    return r;
}

// ---------------------------------------------------------------- dimv

Outcome dimv_point(long g, long d, long m, long n) {
    Outcome out;
    const FSpec spec{g, d, m, n};
    const json at = point(g, d, m, n);
    if (spec.in_region()) {
        const Integer res = dimv_residue(spec);
        const Integer sum = dimv_sum(spec);
        out.check(res == sum, {{"check", "residue = alternating sum"}, {"at", at}, {"residue", s(res)}, {"sum", s(sum)}});
        if (n == 0) {
            const Integer expect = binomial(m + d + g - 2, m);
            out.check(res == expect, {{"check", "n = 0 binomial"}, {"at", at}, {"value", s(res)}, {"expected", s(expect)}});
        }
        if (d >= 2 * g && spec.h() < 0) {
            out.check(res == 0, {{"check", "unstable region vanishes"}, {"at", at}, {"value", s(res)}});
        }
    } else {
        const DimResult r = dimv(g, d, m, n);
        const bool unstable = d >= 2 * g && spec.h() < 0;
        const bool good = unstable ? (r.status == DimStatus::zero_unstable && r.value == Integer(0))
                                   : (r.status == DimStatus::outside_region && !r.value);
        out.check(good, {{"check", "dispatcher status"}, {"at", at}, {"status", to_string(r.status)}});
    }
    return out;
}

Outcome dimv_sign_rules(const Grid& grid) {
    Outcome out;
    for (long g = 2; g <= grid.gmax; ++g) {
        for (long d = 3; d <= grid.dmax; ++d) {
            for (long m = -3; m <= grid.mmax; ++m) {
                for (long n = -3; n < 0; ++n) {
                    const DimResult r = dimv(g, d, m, n);
                    const json at = point(g, d, m, n);
                    if (m < 0) {
                        out.check(r.status == DimStatus::zero_m_negative && r.value == Integer(0),
                                  {{"check", "m < 0 gives 0"}, {"at", at}});
                    } else {
                        const Integer expect = (m + n < 0) ? Integer(0) : binomial(m + n + d + g - 2, m + n);
                        out.check(r.status == DimStatus::binomial_n_negative && r.value == expect,
                                  {{"check", "n < 0 binomial"}, {"at", at}});
                    }
                }
            }
        }
    }
    return out;
}

CrosscheckReport suite_dimv(const Grid& grid, unsigned jobs) {
    std::vector<Task> tasks;
    for (long g = 2; g <= grid.gmax; ++g)
        for (long d = 3; d <= grid.dmax; ++d)
            for (long m = 0; m <= grid.mmax; ++m)
                for (long n = 0; n <= grid.nmax; ++n) tasks.emplace_back([=] { return dimv_point(g, d, m, n); });
    tasks.emplace_back([grid] { return dimv_sign_rules(grid); });
    return run_tasks("dimv", grid_json(grid), tasks, jobs);
}

// ---------------------------------------------------------------- poincare

constexpr long kPoincareGenusMax = 4;
constexpr long kSymprodJMax = 5;
constexpr long kSymprodGMax = 3;

Outcome poincare_chamber(long g, long d) {
    Outcome out;
    Polynomial previous;
    for (long i = 0; i <= last_chamber(d); ++i) {
        const json at = {{"g", g}, {"d", d}, {"i", i}};
        const BettiPoly closed = p_pairs_moduli(i, d, g);
        const BettiPoly summed = p_pairs_moduli_sum(i, d, g);
        out.check(closed == summed, {{"check", "closed = telescoped"}, {"at", at}, {"closed", poly_json(closed)}, {"sum", poly_json(summed)}});
        out.check(is_betti(closed) && is_palindrome(closed, d + g - 2),
                  {{"check", "palindrome and nonnegativity"}, {"at", at}, {"poly", poly_json(closed)}});
        if (i > 0) {
            const long top = 2 * d + 2 * g - 2;
            const Polynomial jump = (Polynomial::monomial(Rational(1), static_cast<int>(2 * i)) -
                                     Polynomial::monomial(Rational(1), static_cast<int>(top - 4 * i))) *
                                    p_symprod(i, g);
            out.check((closed - previous) * Polynomial{1, 0, -1} == jump, {{"check", "blow-up relation"}, {"at", at}});
        }
        previous = closed;
    }
    return out;
}

Outcome poincare_fixed() {
    Outcome out;
    for (long g = 0; g <= kSymprodGMax; ++g) {
        for (long j = 0; j <= kSymprodJMax; ++j) {
            const BettiPoly a = p_symprod(j, g);
            const BettiPoly b = p_symprod_oracle(j, g);
            out.check(a == b, {{"check", "symmetric product oracle"}, {"at", {{"g", g}, {"j", j}}}, {"value", poly_json(a)}, {"oracle", poly_json(b)}});
            out.check(is_betti(a) && is_palindrome(a, j), {{"check", "symmetric product palindrome"}, {"at", {{"g", g}, {"j", j}}}});
        }
    }
    for (long g = 2; g <= kPoincareGenusMax; ++g) {
        const BettiPoly hn = p_bundles_HN(g);
        const json at = {{"g", g}};
        out.check(is_betti(hn) && is_palindrome(hn, 3 * g - 3), {{"check", "HN palindrome"}, {"at", at}});
        out.check(hn.eval(Rational(-1)).is_zero(), {{"check", "HN Euler characteristic"}, {"at", at}});
        const BettiPoly from_pairs = p_bundles_from_pairs(g, 4 * g - 3);
        out.check(from_pairs == hn, {{"check", "bundles from pairs"}, {"at", at}, {"value", poly_json(from_pairs)}, {"hn", poly_json(hn)}});
        out.check(hn_from_F(g) == RationalLaurent::from_polynomial(hn), {{"check", "HN from F(a,b,c,t)"}, {"at", at}});
    }
    out.check(p_bundles_HN(2) == Polynomial{1, 0, 1, 4, 1, 0, 1}, {{"check", "genus 2 HN value"}});
    return out;
}

Outcome f_abc_case(long e1, long e2, long e3, long g) {
    Outcome out;
    const auto [coef, closed] = F_abc(e1, e2, e3, g);
    out.check(coef == closed, {{"check", "F(a,b,c,t) routes"}, {"at", {{"e", {e1, e2, e3}}, {"g", g}}}, {"coefficient", coef.str()}, {"closed", closed.str()}});
    return out;
}

/// Two specializations used in the bundle count, then 20 seeded random triples.
std::vector<std::array<long, 4>> f_abc_cases() {
    std::vector<std::array<long, 4>> cases;
    for (long g = 1; g <= kPoincareGenusMax; ++g) {
        cases.push_back({0, 2, -2, g});
        cases.push_back({0, 2, 4, g});
    }
    std::mt19937 rng(20240607);
    std::uniform_int_distribution<long> exp_dist(-4, 4);
    std::uniform_int_distribution<long> g_dist(1, kPoincareGenusMax);
    while (cases.size() < 8 + 20) {
        const long a = exp_dist(rng), b = exp_dist(rng), c = exp_dist(rng), g = g_dist(rng);
        if (a == b || b == c || a == c) continue;
        cases.push_back({a, b, c, g});
    }
    return cases;
}

CrosscheckReport suite_poincare(const Grid& grid, unsigned jobs) {
    std::vector<Task> tasks;
    tasks.emplace_back([] { return poincare_fixed(); });
    for (long g = 2; g <= kPoincareGenusMax; ++g)
        for (long d = 3; d <= grid.dmax; ++d) tasks.emplace_back([=] { return poincare_chamber(g, d); });
    for (const auto& c : f_abc_cases()) tasks.emplace_back([c] { return f_abc_case(c[0], c[1], c[2], c[3]); });
    json g = {{"g", {2, kPoincareGenusMax}}, {"d", {3, grid.dmax}}, {"symprod_j", {0, kSymprodJMax}}, {"symprod_g", {0, kSymprodGMax}}};
    return run_tasks("poincare", std::move(g), tasks, jobs);
}

// ---------------------------------------------------------------- verlinde

constexpr long kVerlindeGMax = 4;
constexpr long kVerlindeKMax = 8;
constexpr long kLevelOneGMax = 6;

Outcome verlinde_point(long g, long k, Parity p, long digits) {
    Outcome out;
    const VerlindeQuery q{g, k, p};
    const Integer exact = verlinde_exact(q);
    const Real trig = verlinde_trig(q, digits);
    const mpfr_prec_t bits = trig.precision();
    const Real err = abs(trig - Real(Rational(exact), bits));
    const json at = {{"g", g}, {"k", k}, {"parity", to_string(p)}};
    out.check(err < Real(Rational(Integer(1), Integer("10000000000")), bits),
              {{"check", "exact = trig"}, {"at", at}, {"exact", s(exact)}, {"trig", trig.str(25)}});
    if (g <= 3 && k <= 4) {
        const Integer other = verlinde_exact_at(q, canonical_degree(q) + 2);
        out.check(other == exact, {{"check", "independent of degree"}, {"at", at}, {"value", s(other)}});
    }
    return out;
}

Outcome verlinde_fixed() {
    Outcome out;
    out.check(verlinde_exact({2, 2, Parity::odd}) == 6, {{"check", "(2,2,odd) = 6"}});
    for (long g = 2; g <= kLevelOneGMax; ++g) {
        const Integer v = verlinde_exact({g, 1, Parity::even});
        out.check(v == Integer(1) << static_cast<mp_bitcnt_t>(g), {{"check", "level one = 2^g"}, {"at", {{"g", g}}}, {"value", s(v)}});
    }
    return out;
}

CrosscheckReport suite_verlinde(unsigned jobs, long digits) {
    std::vector<Task> tasks;
    tasks.emplace_back([] { return verlinde_fixed(); });
    for (long g = 2; g <= kVerlindeGMax; ++g)
        for (long k = 0; k <= kVerlindeKMax; ++k)
            for (Parity p : {Parity::even, Parity::odd}) tasks.emplace_back([=] { return verlinde_point(g, k, p, digits); });
    json g = {{"g", {2, kVerlindeGMax}}, {"k", {0, kVerlindeKMax}}, {"digits", digits}};
    return run_tasks("verlinde", std::move(g), tasks, jobs);
}

// ---------------------------------------------------------------- identities

constexpr std::size_t kResiduePoints = 25;

Outcome antisymmetry_point(long g, long d, long m, long n) {
    Outcome out;
    const RationalLaurent f = F_build({g, d, m, n});
    out.check(subst_reciprocal(f) == -f, {{"check", "F(1/t) = -F(t)"}, {"at", point(g, d, m, n)}});
    return out;
}

Outcome residue_point(long g, long d, long m, long n, long digits) {
    Outcome out;
    const FSpec spec{g, d, m, n};
    const ResidueCheck r = residue_sum_check(spec, digits);
    const Real tol = pow(Real(10, r.defect.precision()), -20);
    out.check(r.defect < tol, {{"check", "root-of-unity residue sum"}, {"at", point(g, d, m, n)}, {"defect", r.defect.str(5)}});
    ++out.counters[spec.h() > 0 ? "residue_points_h_positive" : "residue_points_h_nonpositive"];
    return out;
}

CrosscheckReport suite_identities(const Grid& grid, unsigned jobs, long digits) {
    std::vector<Task> tasks;
    for (long g = 2; g <= grid.gmax; ++g)
        for (long d = 3; d <= grid.dmax; ++d)
            for (long m = 0; m <= grid.mmax; ++m)
                for (long n = 0; n <= grid.nmax; ++n) tasks.emplace_back([=] { return antisymmetry_point(g, d, m, n); });

    std::vector<std::array<long, 4>> region;
    for_region(grid, [&](long g, long d, long m, long n) { region.push_back({g, d, m, n}); });
    if (!region.empty()) {
        const std::size_t count = std::min(kResiduePoints, region.size());
        for (std::size_t k = 0; k < count; ++k) {
            const auto& p = region[k * region.size() / count];
            tasks.emplace_back([p, digits] { return residue_point(p[0], p[1], p[2], p[3], digits); });
        }
    }
    return run_tasks("identities", grid_json(grid), tasks, jobs);
}

}  // namespace

CrosscheckReport crosscheck_suite(std::string_view name, const Grid& grid, unsigned jobs, long precision_digits) {
    if (grid.gmax < 2 || grid.dmax < 3 || grid.mmax < 0 || grid.nmax < 0) {
        throw InputError("grid needs gmax >= 2, dmax >= 3, mmax >= 0, nmax >= 0");
    }
    if (name == "ni") return suite_ni(grid, jobs);
    if (name == "dimv") return suite_dimv(grid, jobs);
    if (name == "poincare") return suite_poincare(grid, jobs);
    if (name == "verlinde") return suite_verlinde(jobs, precision_digits);
    if (name == "identities") return suite_identities(grid, jobs, precision_digits);
    if (name == "all") {
        CrosscheckReport all;
        all.suite = "all";
        all.grid = grid_json(grid);
        for (const auto& part : suite_names()) {
            all.parts.push_back(crosscheck_suite(part, grid, jobs, precision_digits));
            all.cases += all.parts.back().cases;
            for (const auto& note : all.parts.back().notes) all.notes.push_back(note);
        }
        return all;
    }
    throw InputError("unknown suite '" + std::string(name) + "'");
}

}  // namespace pairs
