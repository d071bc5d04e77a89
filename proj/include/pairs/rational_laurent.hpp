#pragma once

#include <string>

#include "pairs/laurent_series.hpp"
#include "pairs/polynomial.hpp"

namespace pairs {

/// Exact rational function t^shift * numerator(t) / denominator(t).
///
/// Normal form: numerator(0) != 0 (unless the function is zero) and
/// denominator(0) == 1, with every power of t absorbed into shift. No gcd
/// reduction is performed, so equality is decided by cross-multiplication.
class RationalLaurent {
public:
    RationalLaurent() : den_(Polynomial::constant(Rational(1))) {}
    RationalLaurent(long shift, Polynomial numerator, Polynomial denominator);

    static RationalLaurent from_polynomial(const Polynomial& p) { return {0, p, Polynomial::constant(Rational(1))}; }
    static RationalLaurent monomial(const Rational& c, long exponent);

    [[nodiscard]] long shift() const { return shift_; }
    [[nodiscard]] const Polynomial& numerator() const { return num_; }
    [[nodiscard]] const Polynomial& denominator() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

    /// Exact Laurent expansion at t = 0, valid for exponents < order.
    [[nodiscard]] LaurentSeries expand(long order) const;
    /// The function r(1/t), renormalized.
    [[nodiscard]] RationalLaurent reciprocal_substitution() const;

    [[nodiscard]] std::string str() const;

    friend RationalLaurent operator+(const RationalLaurent& a, const RationalLaurent& b);
    friend RationalLaurent operator-(const RationalLaurent& a, const RationalLaurent& b);
    friend RationalLaurent operator-(const RationalLaurent& a);
    friend RationalLaurent operator*(const RationalLaurent& a, const RationalLaurent& b);
    /// Throws DivisionByZero on a zero divisor.
    friend RationalLaurent operator/(const RationalLaurent& a, const RationalLaurent& b);

    friend bool operator==(const RationalLaurent& a, const RationalLaurent& b);

private:
    void normalize();

    long shift_ = 0;
    Polynomial num_;
    Polynomial den_;
};

/// Expansion of r at t = 0 through exponent order - 1. Requires order > shift.
LaurentSeries rat_expand(const RationalLaurent& r, long order);

/// r(1/t). An involution up to normal form.
RationalLaurent subst_reciprocal(const RationalLaurent& r);

}  // namespace pairs
