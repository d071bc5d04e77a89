// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails or overruns its time budget.

#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "pairs/chambers.hpp"
#include "pairs/cli.hpp"
#include "pairs/cohomology.hpp"
#include "pairs/crosscheck.hpp"
#include "pairs/numerology.hpp"
#include "pairs/poincare.hpp"
#include "pairs/verlinde.hpp"

using namespace pairs;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<Verdict()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.ok = false;
        v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) v.expect(false, "over time budget");
    if (!v.ok) ++failures;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (v.ok ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << secs << " s / " << budget_s << " s)";
    if (!v.detail.empty()) line << ": " << v.detail;
    std::cout << line.str() << std::endl;
}

std::string note_summary(const CrosscheckReport& r) {
    std::string s;
    for (const auto& n : r.notes) s += (s.empty() ? "" : "; ") + n;
    return s;
}

}  // namespace

int main() {
    criterion(1, "Verlinde exact vs trigonometric", 30, [] {
        Verdict v;
        for (long g = 2; g <= 4; ++g)
            for (long k = 0; k <= 8; ++k)
                for (Parity p : {Parity::even, Parity::odd}) {
                    const VerlindeQuery q{g, k, p};
                    const Integer exact = verlinde_exact(q);
                    const Real trig = verlinde_trig(q, 40);
                    const double err = abs(trig - Real(Rational(exact), trig.precision())).to_double();
                    v.expect(err < 1e-10, "g=" + std::to_string(g) + " k=" + std::to_string(k) + " " + std::string(to_string(p)));
                }
        v.expect(verlinde_exact({2, 2, Parity::odd}) == 6, "(2,2,odd) != 6");
        for (long g = 2; g <= 6; ++g) {
            v.expect(verlinde_exact({g, 1, Parity::even}) == Integer(1) << static_cast<mp_bitcnt_t>(g), "level one != 2^g");
        }
        return v;
    });

    criterion(2, "dim V worked example g=2 d=5 m=n=1", 1, [] {
        Verdict v;
        v.expect(ni_ring(0, 1, 1, 5, 2) == 21, "N_0 != 21");
        v.expect(ni_ring(1, 1, 1, 5, 2) == 13, "N_1 != 13");
        v.expect(ni_ring(2, 1, 1, 5, 2) == 0, "N_2 != 0");
        v.expect(dimv_residue({2, 5, 1, 1}) == 8, "residue route != 8");
        v.expect(dimv_sum({2, 5, 1, 1}) == 8, "alternating sum != 8");
        return v;
    });

    criterion(3, "three-route N_i agreement", 180, [] {
        Verdict v;
        const CrosscheckReport r = crosscheck_suite("ni", Grid{}, 1);
        v.expect(r.ok(), std::to_string(r.failures.size()) + " failures");
        v.detail = std::to_string(r.cases) + " checks; " + note_summary(r);
        return v;
    });

    criterion(4, "Poincare polynomials", 60, [] {
        Verdict v;
        for (long g = 0; g <= 3; ++g)
            for (long j = 0; j <= 5; ++j) {
                const BettiPoly p = p_symprod(j, g);
                v.expect(p == p_symprod_oracle(j, g), "symmetric product oracle");
                v.expect(is_betti(p) && is_palindrome(p, j), "symmetric product palindrome");
            }
        for (long g = 2; g <= 4; ++g)
            for (long d = 3; d <= 12; ++d)
                for (long i = 0; i <= last_chamber(d); ++i) {
                    const BettiPoly p = p_pairs_moduli(i, d, g);
                    v.expect(p == p_pairs_moduli_sum(i, d, g), "closed != telescoped");
                    v.expect(is_betti(p) && is_palindrome(p, d + g - 2), "moduli palindrome");
                }
        for (long g = 2; g <= 4; ++g) {
            const BettiPoly hn = p_bundles_HN(g);
            v.expect(is_betti(hn) && is_palindrome(hn, 3 * g - 3), "HN palindrome");
            v.expect(p_bundles_from_pairs(g, 4 * g - 3) == hn, "bundles from pairs != HN");
        }
        v.expect(p_bundles_HN(2) == Polynomial{1, 0, 1, 4, 1, 0, 1}, "genus 2 value");
        return v;
    });

    criterion(5, "F(a,b,c,t) coefficient route = closed form", 60, [] {
        Verdict v;
        const CrosscheckReport r = crosscheck_suite("poincare", Grid{}, 1);
        v.expect(r.ok(), std::to_string(r.failures.size()) + " poincare suite failures");
        for (const auto& f : r.failures) {
            if (f.contains("check") && f["check"] == "F(a,b,c,t) routes") v.expect(false, f.dump());
        }
        for (long g = 1; g <= 4; ++g) {
            for (const auto& e : {std::array<long, 3>{0, 2, -2}, std::array<long, 3>{0, 2, 4}}) {
                const auto [coef, closed] = F_abc(e[0], e[1], e[2], g);
                v.expect(coef == closed, "specialization g=" + std::to_string(g));
            }
            if (g >= 2) v.expect(hn_from_F(g) == RationalLaurent::from_polynomial(p_bundles_HN(g)), "HN assembly");
        }
        return v;
    });

    criterion(6, "identities: antisymmetry, root-of-unity residues, unstable vanishing", 120, [] {
        Verdict v;
        const CrosscheckReport r = crosscheck_suite("identities", Grid{}, 1);
        v.expect(r.ok(), std::to_string(r.failures.size()) + " failures");
        const long h_pos = r.statistics.count("residue_points_h_positive") ? r.statistics.at("residue_points_h_positive") : 0;
        const long h_other = r.statistics.count("residue_points_h_nonpositive") ? r.statistics.at("residue_points_h_nonpositive") : 0;
        v.expect(h_pos + h_other == 25, "residue check did not cover 25 points");
        v.expect(h_pos > 0, "no h > 0 residue points");
        for (long g = 2; g <= 3; ++g)
            for (long d = 2 * g; d <= 12; ++d)
                for (long m = 0; m <= 8; ++m)
                    for (long n = 0; n <= 8; ++n) {
                        const FSpec s{g, d, m, n};
                        if (s.in_region() && s.h() < 0) v.expect(dimv_residue(s) == 0, "unstable residue nonzero");
                    }
        if (v.ok) v.detail = std::to_string(r.cases) + " checks, " + std::to_string(h_pos) + " residue points with h > 0";
        return v;
    });

    criterion(7, "region and boundary rules", 60, [] {
        Verdict v;
        for (long g = 2; g <= 3; ++g)
            for (long d = 3; d <= 12; ++d) {
                v.expect(*dimv(g, d, -1, 2).value == 0, "m < 0");
                v.expect(*dimv(g, d, 3, -1).value == binomial(d + g, 2), "n < 0");
                for (long m = 0; m <= 8; ++m)
                    for (long n = 0; n <= 8; ++n) {
                        if (!region_holds(g, d, m, n)) continue;
                        const long b = blowup_level_b(m, n, ChamberSpec::make(g, d));
                        v.expect(b <= last_chamber(d), "b > w");
                        v.expect(ni_ring(static_cast<int>(b + 1), m, n, d, static_cast<int>(g)).is_zero(), "N_(b+1) != 0");
                    }
            }
        // d = 7, g = 2 by hand: i=1: 0 < n < m; i=2: m < n < 2m; i=3: 2m < n, 2n < 5m.
        const ChamberSpec s = ChamberSpec::make(2, 7);
        struct Row {
            long m, n, i;
            AmplenessVerdict verdict;
        };
        const Row table[] = {
            {1, 1, 2, AmplenessVerdict::not_ample}, {2, 3, 2, AmplenessVerdict::ample},
            {2, 5, 3, AmplenessVerdict::not_ample}, {2, 1, 1, AmplenessVerdict::ample},
            {1, 0, 1, AmplenessVerdict::not_ample}, {3, 4, 2, AmplenessVerdict::ample},
            {3, 6, 2, AmplenessVerdict::not_ample}, {3, 7, 3, AmplenessVerdict::ample},
            {4, 10, 3, AmplenessVerdict::not_ample}, {5, 12, 3, AmplenessVerdict::ample},
        };
        for (const auto& row : table) {
            v.expect(is_ample({row.m, row.n, row.i}, s) == row.verdict,
                     "O_" + std::to_string(row.i) + "(" + std::to_string(row.m) + "," + std::to_string(row.n) + ")");
        }
        v.expect(chamber_index(Rational(Integer(1), Integer(4)), s) == 3, "chamber of 1/4");
        v.expect(chamber_index(Rational(3), s) == 0, "chamber of 3");
        return v;
    });

    criterion(8, "crosscheck determinism across job counts", 240, [] {
        Verdict v;
        std::ostringstream a, b, err;
        const int ca = cli::run({"crosscheck", "--suite", "all", "--jobs", "1", "--format", "json"}, a, err);
        const int cb = cli::run({"crosscheck", "--suite", "all", "--jobs", "8", "--format", "json"}, b, err);
        v.expect(ca == 0 && cb == 0, "crosscheck reported failures");
        v.expect(a.str() == b.str(), "reports differ");
        v.expect(!a.str().empty(), "empty report");
        return v;
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
