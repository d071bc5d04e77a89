#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pairs/rational.hpp"

namespace pairs {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficient k multiplies t^k. Trailing zeros are always stripped, so the
/// zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int degree);

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// Index of the lowest nonzero coefficient, -1 for the zero polynomial.
    [[nodiscard]] int valuation() const;

    /// Zero outside [0, degree].
    [[nodiscard]] Rational coefficient(int k) const;
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
    [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

    [[nodiscard]] Rational eval(const Rational& x) const;
    /// Multiply by t^k, k >= 0.
    [[nodiscard]] Polynomial shifted(int k) const;
    /// Divide by t^k; the dropped coefficients must be zero.
    [[nodiscard]] Polynomial unshifted(int k) const;
    /// t^degree * p(1/t).
    [[nodiscard]] Polynomial reversed() const;
    [[nodiscard]] Polynomial pow(unsigned e) const;

    [[nodiscard]] bool has_integer_coefficients() const;
    [[nodiscard]] bool has_nonnegative_coefficients() const;

    /// Quotient and remainder of Euclidean division. Throws DivisionByZero.
    [[nodiscard]] std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    /// Quotient of a division that must be exact; throws NotDivisible otherwise.
    [[nodiscard]] Polynomial exact_div(const Polynomial& divisor) const;

    /// "1 + 4t + t^2" style rendering.
    [[nodiscard]] std::string str(std::string_view var = "t") const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

/// (1 - t^k)^e for k >= 1, built directly from the binomial theorem.
Polynomial one_minus_t_pow(int k, unsigned e);

}  // namespace pairs
