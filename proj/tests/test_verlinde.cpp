#include <doctest.h>

#include "generators.hpp"
#include "pairs/errors.hpp"
#include "pairs/verlinde.hpp"

using namespace pairs;

namespace {

/// Genus 2, even degree: the moduli space is P^3 and Theta = O(1).
Integer genus2_even(long k) { return binomial(k + 3, 3); }

/// Genus 2, odd degree: a (2,2) complete intersection in P^5 with Theta = O(1),
/// so Z_k = h^0(O(k/2)) for even k.
Integer genus2_odd(long k) {
    const long j = k / 2;
    return binomial(j + 5, 5) - 2 * binomial(j + 3, 5) + binomial(j + 1, 5);
}

bool close(const Real& x, const Integer& v, double tol) {
    return abs(x - Real(Rational(v), x.precision())).to_double() < tol;
}

}  // namespace

TEST_CASE("F exponents") {
    const FSpec s{2, 5, 1, 1};
    CHECK(s.h() == 1);
    CHECK(s.h_prime() == -4);
    CHECK(s.in_region());
    for (int trial = 0; trial < 100; ++trial) {
        const FSpec r{testgen::integer(2, 5), testgen::integer(3, 12), testgen::integer(0, 8), testgen::integer(0, 8)};
        CHECK(r.h() + r.h_prime() == -r.d + 2 * r.g - 2);
        CHECK(r.in_region() == (r.h_prime() < 0));
    }
    CHECK_THROWS_AS((F_build({2, 5, -1, 0})), OutOfRange);
}

TEST_CASE("F(1/t) = -F(t) and no pole at t = 1") {
    for (int trial = 0; trial < 60; ++trial) {
        const FSpec s{testgen::integer(2, 4), testgen::integer(3, 12), testgen::integer(0, 8), testgen::integer(0, 8)};
        const RationalLaurent f = F_build(s);
        CHECK(subst_reciprocal(f) == -f);
        // Order at t = 1 is nonnegative: (1-t)^k divides the numerator whenever
        // it divides the denominator.
        const Polynomial& den = f.denominator();
        Polynomial num = f.numerator();
        Polynomial rest = den;
        while (rest.degree() > 0 && rest.eval(Rational(1)).is_zero()) {
            rest = rest.exact_div(Polynomial{1, -1});
            CHECK(num.eval(Rational(1)).is_zero());
            num = num.exact_div(Polynomial{1, -1});
        }
    }
}

TEST_CASE("dim V values from independent expansions") {
    CHECK(dimv_residue({2, 5, 1, 1}) == 8);
    CHECK(dimv_sum({2, 5, 1, 1}) == 8);
    CHECK(dimv_residue({2, 4, 1, 1}) == 4);
    CHECK(dimv_residue({2, 5, 2, 3}) == 6);
    CHECK(dimv_residue({3, 6, 1, 2}) == 8);
    CHECK(dimv_residue({2, 6, 2, 4}) == 10);
    CHECK(dimv_residue({2, 5, 0, 1}) == 0);
    CHECK(dimv_sum({2, 5, 0, 0}) == 1);
    CHECK_THROWS_AS((dimv_residue({3, 4, 0, 1})), RegionViolation);
    CHECK_THROWS_AS((dimv_sum({3, 4, 0, 1})), RegionViolation);
}

TEST_CASE("dim V with n = 0 counts sections on projective space") {
    for (long g = 2; g <= 3; ++g)
        for (long d = 3; d <= 10; ++d)
            for (long m = 0; m <= 6; ++m) {
                const FSpec s{g, d, m, 0};
                if (!s.in_region()) continue;
                CHECK(dimv_residue(s) == binomial(m + d + g - 2, m));
            }
}

TEST_CASE("residue and alternating sum agree on a sampled grid") {
    for (int trial = 0; trial < 60; ++trial) {
        const FSpec s{testgen::integer(2, 3), testgen::integer(3, 12), testgen::integer(0, 8), testgen::integer(0, 8)};
        if (!s.in_region()) continue;
        CHECK(dimv_residue(s) == dimv_sum(s));
    }
}

TEST_CASE("dispatcher regions") {
    DimResult r = dimv(2, 5, 1, -1);
    CHECK(r.status == DimStatus::binomial_n_negative);
    CHECK(*r.value == 1);
    r = dimv(2, 5, 3, -1);
    CHECK(*r.value == binomial(7, 2));
    r = dimv(2, 5, 1, -3);
    CHECK(*r.value == 0);
    r = dimv(2, 5, -1, 0);
    CHECK(r.status == DimStatus::zero_m_negative);
    CHECK(*r.value == 0);
    r = dimv(3, 4, 0, 1);
    CHECK(r.status == DimStatus::outside_region);
    CHECK_FALSE(r.value.has_value());
    r = dimv(2, 6, 1, 5);  // d >= 2g, h = -6, below the region
    CHECK(r.status == DimStatus::zero_unstable);
    CHECK(*r.value == 0);
    r = dimv(2, 5, 1, 1);
    CHECK(r.status == DimStatus::residue_region);
    REQUIRE(r.trace.size() == 2);
    CHECK(r.trace[0].first == "residue");
    CHECK(r.trace[1].second == 8);
    CHECK(dimv(2, 5, 1, 1, DimRoutes::sum).trace.size() == 1);
}

TEST_CASE("residue formula vanishes where sections cannot exist") {
    for (long g = 2; g <= 3; ++g)
        for (long d = 2 * g; d <= 12; ++d)
            for (long m = 0; m <= 8; ++m)
                for (long n = 0; n <= 8; ++n) {
                    const FSpec s{g, d, m, n};
                    if (s.in_region() && s.h() < 0) CHECK(dimv_residue(s) == 0);
                }
}

TEST_CASE("Verlinde numbers") {
    for (long k = 0; k <= 8; ++k) {
        CHECK(verlinde_exact({2, k, Parity::even}) == genus2_even(k));
        CHECK(verlinde_exact({2, k, Parity::odd}) == (k % 2 == 0 ? genus2_odd(k) : Integer(0)));
    }
    CHECK(verlinde_exact({2, 2, Parity::odd}) == 6);
    for (long g = 2; g <= 6; ++g) CHECK(verlinde_exact({g, 1, Parity::even}) == Integer(1) << static_cast<mp_bitcnt_t>(g));
    for (long g = 2; g <= 5; ++g) CHECK(verlinde_exact({g, 0, Parity::odd}) == 1);
    CHECK_THROWS_AS((verlinde_exact_at({2, 2, Parity::odd}, 6)), InputError);
    CHECK_THROWS_AS((verlinde_exact_at({3, 2, Parity::even}, 4)), OutOfRange);
}

TEST_CASE("Verlinde numbers do not depend on the degree") {
    for (long g = 2; g <= 3; ++g)
        for (long k = 0; k <= 4; ++k)
            for (Parity p : {Parity::even, Parity::odd}) {
                const VerlindeQuery q{g, k, p};
                const long d0 = canonical_degree(q);
                CHECK(verlinde_exact_at(q, d0 + 2) == verlinde_exact(q));
                CHECK(verlinde_exact_at(q, d0 + 4) == verlinde_exact(q));
            }
}

TEST_CASE("trigonometric Verlinde sum") {
    CHECK(close(verlinde_trig({2, 2, Parity::odd}, 40), 6, 1e-30));
    CHECK(close(verlinde_trig({2, 1, Parity::odd}, 40), 0, 1e-30));
    CHECK(close(verlinde_trig({5, 0, Parity::even}, 40), 1, 1e-30));
    for (long g = 2; g <= 4; ++g)
        for (long k = 0; k <= 8; ++k)
            for (Parity p : {Parity::even, Parity::odd}) {
                const VerlindeQuery q{g, k, p};
                CHECK(close(verlinde_trig(q, 40), verlinde_exact(q), 1e-10));
            }
}

TEST_CASE("root-of-unity residues balance the residue at zero") {
    const ResidueCheck r = residue_sum_check({2, 5, 1, 1}, 40);
    CHECK(r.defect.to_double() < 1e-20);
    CHECK(r.poles == 2);  // h' < 0 <= h: only the nontrivial cube roots
    const ResidueCheck none = residue_sum_check({2, 7, 1, 3}, 40);  // h, h' < 0
    CHECK(none.poles == 0);
    CHECK(dimv_residue({2, 7, 1, 3}) == 0);
    for (const FSpec s : {FSpec{3, 9, 3, 2}, FSpec{2, 12, 8, 0}, FSpec{3, 4, 2, 0}, FSpec{2, 3, 2, 0}}) {
        CAPTURE(s.d);
        CHECK(residue_sum_check(s, 40).defect.to_double() < 1e-20);
    }
    CHECK_THROWS_AS((residue_sum_check({3, 4, 0, 1}, 40)), RegionViolation);
}
