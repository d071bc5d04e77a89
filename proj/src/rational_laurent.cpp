#include "pairs/rational_laurent.hpp"

#include "pairs/errors.hpp"

namespace pairs {

RationalLaurent::RationalLaurent(long shift, Polynomial numerator, Polynomial denominator)
    : shift_(shift), num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

RationalLaurent RationalLaurent::monomial(const Rational& c, long exponent) {
    return {exponent, Polynomial::constant(c), Polynomial::constant(Rational(1))};
}

void RationalLaurent::normalize() {
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = Polynomial::constant(Rational(1));
        return;
    }
    const int vn = num_.valuation();
    const int vd = den_.valuation();
    num_ = num_.unshifted(vn);
    den_ = den_.unshifted(vd);
    shift_ += vn - vd;
    const Rational c0 = den_.coefficient(0);
    if (c0 != Rational(1)) {
        const Rational inv = Rational(1) / c0;
        num_ *= inv;
        den_ *= inv;
    }
}

LaurentSeries RationalLaurent::expand(long order) const {
    if (order <= shift_) throw InputError("expansion order must exceed the leading exponent");
    const long n = order - shift_;
    const auto num = LaurentSeries::from_polynomial(num_, n);
    const auto den = LaurentSeries::from_polynomial(den_, n);
    return (num * den.inverse()).shifted(shift_);
}

RationalLaurent RationalLaurent::reciprocal_substitution() const {
    if (is_zero()) return *this;
    // t^s N(1/t)/D(1/t) = t^(s - deg N + deg D) rev(N)/rev(D)
    return {-shift_ - num_.degree() + den_.degree(), num_.reversed(), den_.reversed()};
}

std::string RationalLaurent::str() const {
    std::string out = "t^" + std::to_string(shift_) + " * (" + num_.str() + ")";
    if (den_.degree() > 0) out += " / (" + den_.str() + ")";
    return out;
}

RationalLaurent operator+(const RationalLaurent& a, const RationalLaurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long lo = std::min(a.shift_, b.shift_);
    Polynomial num = (a.num_ * b.den_).shifted(static_cast<int>(a.shift_ - lo)) +
                     (b.num_ * a.den_).shifted(static_cast<int>(b.shift_ - lo));
    if (a.den_ == b.den_) return {lo, std::move(num), a.den_};
    return {lo, std::move(num), a.den_ * b.den_};
}

RationalLaurent operator-(const RationalLaurent& a) {
    RationalLaurent out = a;
    out.num_ *= Rational(-1);
    return out;
}

RationalLaurent operator-(const RationalLaurent& a, const RationalLaurent& b) { return a + (-b); }

RationalLaurent operator*(const RationalLaurent& a, const RationalLaurent& b) {
    return {a.shift_ + b.shift_, a.num_ * b.num_, a.den_ * b.den_};
}

RationalLaurent operator/(const RationalLaurent& a, const RationalLaurent& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return {a.shift_ - b.shift_, a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const RationalLaurent& a, const RationalLaurent& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    // Normal forms have nonzero constant terms, so the t-adic valuation is the shift.
    if (a.shift_ != b.shift_) return false;
    if (a.num_ == b.num_ && a.den_ == b.den_) return true;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

LaurentSeries rat_expand(const RationalLaurent& r, long order) { return r.expand(order); }

RationalLaurent subst_reciprocal(const RationalLaurent& r) { return r.reciprocal_substitution(); }

}  // namespace pairs
