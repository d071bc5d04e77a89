#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairs/polynomial.hpp"
#include "pairs/rational.hpp"

namespace pairs {

/// Truncated Laurent series sum_{e >= shift} c_e t^e known exactly for e < order.
///
/// Coefficients with exponent >= order are unknown, not zero: reading one
/// throws OutOfWindow. Arithmetic propagates the tightest order that the
/// operands justify.
class LaurentSeries {
public:
    /// coeffs[k] is the coefficient of t^(shift + k); shift + coeffs.size() <= order.
    LaurentSeries(long shift, std::vector<Rational> coeffs, long order);

    static LaurentSeries zero(long order);
    static LaurentSeries monomial(const Rational& c, long exponent, long order);
    static LaurentSeries from_polynomial(const Polynomial& p, long order);

    /// Lowest stored exponent; equals the valuation unless the series is zero
    /// to working order, in which case it equals order().
    [[nodiscard]] long shift() const { return shift_; }
    [[nodiscard]] long order() const { return order_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] std::optional<long> valuation() const;

    /// Exact coefficient of t^e. Throws OutOfWindow when e >= order().
    [[nodiscard]] Rational coeff(long e) const;
    /// Coefficients for exponents [shift, order).
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }

    [[nodiscard]] LaurentSeries truncated(long order) const;
    /// Multiply by t^k.
    [[nodiscard]] LaurentSeries shifted(long k) const;
    /// Multiplicative inverse; throws NonInvertible if zero to working order.
    [[nodiscard]] LaurentSeries inverse() const;
    /// The known part as a polynomial; requires shift() >= 0.
    [[nodiscard]] Polynomial to_polynomial() const;

    [[nodiscard]] std::string str(std::string_view var = "t") const;

    LaurentSeries& operator*=(const Rational& c);
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(LaurentSeries a) { return a *= Rational(-1); }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(LaurentSeries a, const Rational& c) { return a *= c; }
    friend LaurentSeries operator*(const Rational& c, LaurentSeries a) { return a *= c; }

    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

private:
    void normalize();

    long shift_ = 0;
    std::vector<Rational> coeffs_;
    long order_ = 0;
};

/// Exact coefficient of t^e; residue of s dt/t is coeff(s, 0), of s dt is coeff(s, -1).
Rational coeff(const LaurentSeries& s, long e);

/// s^e at the maximal provable order. For e < 0 the series must be nonzero.
LaurentSeries series_pow(const LaurentSeries& s, long e);

/// exp(c t) to the given order.
LaurentSeries exp_series(const Rational& c, long order);

}  // namespace pairs
