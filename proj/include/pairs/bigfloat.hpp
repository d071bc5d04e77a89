#pragma once

#include <string>
#include <utility>

#include <mpfr.h>

#include "pairs/rational.hpp"

namespace pairs {

/// Decimal digits to MPFR bits, with a small guard margin.
mpfr_prec_t digits_to_bits(long digits);

/// Owning MPFR value with an explicit precision.
///
/// Precision is a property of each value, never a process-wide default, so
/// threads can evaluate at different precisions concurrently. Binary
/// operations round to the larger of the two operand precisions.
class Real {
public:
    explicit Real(mpfr_prec_t bits);
    Real(long v, mpfr_prec_t bits);
    Real(const Rational& v, mpfr_prec_t bits);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real pi(mpfr_prec_t bits);

    [[nodiscard]] mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Scientific notation with the given number of significant digits.
    [[nodiscard]] std::string str(int digits = 20) const;
    [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    mpfr_ptr raw() { return v_; }
    [[nodiscard]] mpfr_srcptr raw() const { return v_; }

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator-(const Real& a);
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

Real sin(const Real& x);
Real cos(const Real& x);
Real abs(const Real& x);
Real sqrt(const Real& x);
Real pow(const Real& x, long e);
/// Nearest integer.
Integer round_to_integer(const Real& x);

class Complex {
public:
    explicit Complex(mpfr_prec_t bits) : re_(bits), im_(bits) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(const Rational& v, mpfr_prec_t bits) : re_(v, bits), im_(bits) {}

    /// exp(2 pi i r / M).
    static Complex root_of_unity(long r, long modulus, mpfr_prec_t bits);

    [[nodiscard]] const Real& re() const { return re_; }
    [[nodiscard]] const Real& im() const { return im_; }
    [[nodiscard]] mpfr_prec_t precision() const { return re_.precision(); }
    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend Complex operator*(const Complex& a, const Real& s) { return {a.re_ * s, a.im_ * s}; }
    friend Complex operator/(const Complex& a, const Complex& b);

private:
    Real re_;
    Real im_;
};

Real abs(const Complex& z);

}  // namespace pairs
