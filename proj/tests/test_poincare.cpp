#include <doctest.h>

#include "generators.hpp"
#include "pairs/errors.hpp"
#include "pairs/numerology.hpp"
#include "pairs/poincare.hpp"

using namespace pairs;

namespace {

Polynomial geometric_even(long top) {
    Polynomial p;
    for (long k = 0; k <= top; ++k) p += Polynomial::monomial(Rational(1), static_cast<int>(2 * k));
    return p;
}

}  // namespace

TEST_CASE("symmetric products of a curve") {
    CHECK(p_symprod(0, 3) == Polynomial{1});
    CHECK(p_symprod(1, 2) == Polynomial{1, 4, 1});
    CHECK(p_symprod(2, 2) == Polynomial{1, 4, 7, 4, 1});
    for (long g = 0; g <= 3; ++g) {
        for (long j = 0; j <= 5; ++j) {
            const BettiPoly p = p_symprod(j, g);
            CHECK(p == p_symprod_oracle(j, g));
            CHECK(is_palindrome(p, j));
            CHECK(is_betti(p));
            // chi(X_j) = Coeff_{x^j} (1-x)^(2g-2).
            CHECK(p.eval(Rational(-1)) == gen_binomial(2 * g - 2, j) * Rational(j % 2 == 0 ? 1 : -1));
        }
    }
    CHECK_THROWS_AS(p_symprod(-1, 2), OutOfRange);
}

TEST_CASE("moduli of pairs: chamber 0 is projective space") {
    for (long g = 2; g <= 4; ++g) {
        for (long d = 3; d <= 9; ++d) CHECK(p_pairs_moduli(0, d, g) == geometric_even(d + g - 2));
    }
    CHECK_THROWS_AS(p_pairs_moduli(3, 5, 2), InvalidChamber);
    CHECK_THROWS_AS(p_pairs_moduli_sum(-1, 5, 2), InvalidChamber);
}

TEST_CASE("moduli of pairs: closed form, telescoped sum and blow-up steps") {
    for (long g = 2; g <= 4; ++g) {
        for (long d = 3; d <= 12; ++d) {
            Polynomial previous;
            for (long i = 0; i <= last_chamber(d); ++i) {
                const BettiPoly p = p_pairs_moduli(i, d, g);
                CHECK(p == p_pairs_moduli_sum(i, d, g));
                CHECK(is_palindrome(p, d + g - 2));
                CHECK(is_betti(p));
                if (i > 0) {
                    const long top = 2 * d + 2 * g - 2;
                    const Polynomial step = Polynomial::monomial(Rational(1), static_cast<int>(2 * i)) -
                                            Polynomial::monomial(Rational(1), static_cast<int>(top - 4 * i));
                    CHECK((p - previous) * Polynomial{1, 0, -1} == step * p_symprod(i, g));
                }
                previous = p;
            }
        }
    }
    // g = 2, d = 3: M_1 is P^3 blown up along the embedded curve.
    CHECK(p_pairs_moduli(1, 3, 2) == Polynomial{1, 0, 2, 4, 2, 0, 1});
}

TEST_CASE("rank-2 odd-degree bundles") {
    CHECK(p_bundles_HN(2) == Polynomial{1, 0, 1, 4, 1, 0, 1});
    for (long g = 2; g <= 4; ++g) {
        const BettiPoly hn = p_bundles_HN(g);
        CHECK(is_palindrome(hn, 3 * g - 3));
        CHECK(is_betti(hn));
        CHECK(hn.eval(Rational(-1)) == 0);
        CHECK(p_bundles_from_pairs(g, 4 * g - 3) == hn);
        CHECK(p_bundles_from_pairs(g, 4 * g - 1) == hn);
        CHECK(hn_from_F(g) == RationalLaurent::from_polynomial(hn));
    }
    CHECK_THROWS_AS(p_bundles_from_pairs(3, 8), OutOfRange);
    CHECK_THROWS_AS(p_bundles_from_pairs(3, 7), OutOfRange);
    CHECK_THROWS_AS(p_bundles_HN(1), OutOfRange);
}

TEST_CASE("F(a,b,c,t): both routes, named specializations and random triples") {
    for (long g = 1; g <= 4; ++g) {
        const auto [c1, f1] = F_abc(0, 2, -2, g);
        CHECK(c1 == f1);
        const auto [c2, f2] = F_abc(0, 2, 4, g);
        CHECK(c2 == f2);
    }
    // Genus 1: Coeff_{x^0} is 1.
    CHECK(F_abc(1, 3, -5, 1).first == RationalLaurent::monomial(Rational(1), 0));
    for (int trial = 0; trial < 20; ++trial) {
        const long a = testgen::integer(-4, 4), b = testgen::integer(-4, 4), c = testgen::integer(-4, 4);
        if (a == b || b == c || a == c) continue;
        const auto [coef, closed] = F_abc(a, b, c, testgen::integer(1, 4));
        CHECK(coef == closed);
    }
    CHECK_THROWS_AS(F_abc(1, 1, 2, 2), DegenerateParameters);
}
