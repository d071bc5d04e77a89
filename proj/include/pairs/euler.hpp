#pragma once

#include <string_view>

#include "pairs/rational.hpp"

namespace pairs {

/// Sign inside the (1 -/+ t)^(2g-2) denominator of the residue integrand.
/// The generating function for the symmetric powers produces (1 - t); the
/// residue route keeps the other choice available so the grid can arbitrate.
enum class ResidueSign { minus, plus };

/// Exponent used for (1 + t y) and (1 + y) in the y-substituted integrand:
/// `reconciled` uses -h - 1 and h + d - 2g + 1 (what the substitution actually
/// produces); `half` uses q - 1 and -q + d - 2g + 1 with q = -h/2, defined
/// only for even h.
enum class AyExponent { reconciled, half };

inline constexpr ResidueSign kDefaultResidueSign = ResidueSign::minus;
inline constexpr AyExponent kDefaultAyExponent = AyExponent::reconciled;

std::string_view to_string(ResidueSign s);
std::string_view to_string(AyExponent e);

struct ResidueOptions {
    ResidueSign sign = kDefaultResidueSign;
    /// Working eta-order; <= 0 selects i + 2g + 2.
    long eta_order = 0;
};

/// N_i as Coeff_{t^(q_i - i)} Res_{eta=0} of the combined Riemann-Roch integrand,
/// expanded as a series in eta with power-series-in-t coefficients.
Rational ni_residue(int index, long m, long n, long d, int genus, ResidueOptions options = {});

/// N_i as Coeff_{t^(q_i - i)} Coeff_{y^i} a(y) after the substitution
/// y = (e^-eta - t) / (1 - e^-eta). Throws InputError for AyExponent::half with odd h.
Rational ni_y(int index, long m, long n, long d, int genus, AyExponent exponent = kDefaultAyExponent);

}  // namespace pairs
