#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pairs {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Serializes as "p/q", or "p" when
/// the denominator is one.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    /// Throws DivisionByZero when den is zero.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p", "-p", "p/q". Throws InputError on malformed text.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Requires is_integer(); throws NonInteger otherwise.
    [[nodiscard]] Integer to_integer() const;

    [[nodiscard]] std::string str() const;

    [[nodiscard]] const mpq_class& raw() const { return value_; }
    [[nodiscard]] mpq_class& raw() { return value_; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_;
};

/// a(a-1)...(a-k+1)/k! for integer a and k >= 0. Integer-valued.
Rational gen_binomial(long a, long k);

/// Ordinary binomial coefficient; zero when k < 0 or (n >= 0 and k > n).
Integer binomial(long n, long k);

Rational pow(const Rational& base, long exponent);

}  // namespace pairs
