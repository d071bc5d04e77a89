#pragma once

#include <utility>

#include "pairs/polynomial.hpp"
#include "pairs/rational_laurent.hpp"

namespace pairs {

/// Poincare polynomial: integer coefficients, index = cohomological degree.
using BettiPoly = Polynomial;

/// t^(2n) P(1/t) == P(t) with degree exactly 2n.
bool is_palindrome(const BettiPoly& p, long complex_dim);
/// Integer, nonnegative coefficients.
bool is_betti(const BettiPoly& p);

/// P_t(X_j) = Coeff_{x^j} (1 + xt)^(2g) / ((1 - x)(1 - x t^2)).
BettiPoly p_symprod(long j, long g);
/// Brute-force count over monomials x^a y^b xi_I of the super-symmetric power.
BettiPoly p_symprod_oracle(long j, long g);

/// P_t(M_i) by the closed two-term x-expansion. Throws InvalidChamber unless 0 <= i <= w.
BettiPoly p_pairs_moduli(long i, long d, long g);
/// P_t(M_i) by telescoping the projective-bundle splitting over j = 0..i.
BettiPoly p_pairs_moduli_sum(long i, long d, long g);

/// Harder-Narasimhan formula for the odd-degree rank-2 moduli space.
BettiPoly p_bundles_HN(long g);
/// (1 - t^2) / (1 - t^(2d-4g+4)) P_t(M_w); needs d odd and d > 4g - 4.
BettiPoly p_bundles_from_pairs(long g, long d);

/// F(a,b,c,t) at a = t^e1, b = t^e2, c = t^e3: first by expanding
/// Coeff_{x^(2g-2)} (1 + xt)^(2g) / ((1-ax)(1-bx)(1-cx)), then by the
/// partial-fraction form sum_cyc (a+t)^(2g) / ((a-b)(a-c)).
/// Throws DegenerateParameters if two exponents coincide.
std::pair<RationalLaurent, RationalLaurent> F_abc(long e1, long e2, long e3, long g);

/// (t^(4g-4) F(1,t^2,t^-2,t) - t^(2g) F(1,t^2,t^4,t)) / (1 - t^(4g-2)), via the
/// coefficient route; equals p_bundles_HN(g).
RationalLaurent hn_from_F(long g);

}  // namespace pairs
