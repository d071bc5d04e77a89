#include "pairs/laurent_series.hpp"

#include <algorithm>
#include <sstream>

#include "pairs/errors.hpp"

namespace pairs {

LaurentSeries::LaurentSeries(long shift, std::vector<Rational> coeffs, long order)
    : shift_(shift), coeffs_(std::move(coeffs)), order_(order) {
    if (shift_ + static_cast<long>(coeffs_.size()) > order_) {
        throw InputError("series coefficients extend past the truncation order");
    }
    normalize();
}

void LaurentSeries::normalize() {
    const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        shift_ = order_;
        return;
    }
    shift_ += first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
    coeffs_.resize(static_cast<std::size_t>(order_ - shift_));
}

LaurentSeries LaurentSeries::zero(long order) { return LaurentSeries(order, {}, order); }

LaurentSeries LaurentSeries::monomial(const Rational& c, long exponent, long order) {
    if (exponent >= order) return zero(order);
    return LaurentSeries(exponent, {c}, order);
}

LaurentSeries LaurentSeries::from_polynomial(const Polynomial& p, long order) {
    std::vector<Rational> v;
    const long n = std::min<long>(order, p.degree() + 1);
    if (order <= 0) return zero(order);
    for (long k = 0; k < n; ++k) v.push_back(p.coefficient(static_cast<int>(k)));
    return LaurentSeries(0, std::move(v), order);
}

std::optional<long> LaurentSeries::valuation() const {
    if (is_zero()) return std::nullopt;
    return shift_;
}

Rational LaurentSeries::coeff(long e) const {
    if (e >= order_) {
        throw OutOfWindow("coefficient of t^" + std::to_string(e) + " requested but series is only known below t^" +
                          std::to_string(order_));
    }
    if (e < shift_) return {};
    return coeffs_[static_cast<std::size_t>(e - shift_)];
}

LaurentSeries LaurentSeries::truncated(long order) const {
    if (order >= order_) return *this;
    if (order <= shift_) return zero(order);
    return LaurentSeries(shift_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (order - shift_)), order);
}

LaurentSeries LaurentSeries::shifted(long k) const {
    LaurentSeries out = *this;
    out.shift_ += k;
    out.order_ += k;
    return out;
}

LaurentSeries LaurentSeries::inverse() const {
    if (is_zero()) throw NonInvertible("series is zero to working order");
    const std::size_t n = coeffs_.size();
    std::vector<Rational> b(n);
    const Rational inv0 = Rational(1) / coeffs_[0];
    b[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (!coeffs_[j].is_zero()) acc += coeffs_[j] * b[k - j];
        }
        b[k] = -acc * inv0;
    }
    return LaurentSeries(-shift_, std::move(b), -shift_ + static_cast<long>(n));
}

Polynomial LaurentSeries::to_polynomial() const {
    if (is_zero()) return {};
    if (shift_ < 0) throw InputError("series has negative exponents");
    return Polynomial(coeffs_).shifted(static_cast<int>(shift_));
}

std::string LaurentSeries::str(std::string_view var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        const long e = shift_ + static_cast<long>(k);
        os << (first ? "" : " + ") << "(" << c.str() << ")";
        if (e != 0) os << var << "^" << e;
        first = false;
    }
    os << (first ? "" : " + ") << "O(" << var << "^" << order_ << ")";
    return os.str();
}

LaurentSeries& LaurentSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const long order = std::min(a.order_, b.order_);
    const long lo = std::min(a.shift_, b.shift_);
    if (lo >= order) return LaurentSeries::zero(order);
    std::vector<Rational> v(static_cast<std::size_t>(order - lo));
    for (long e = lo; e < order; ++e) {
        Rational& slot = v[static_cast<std::size_t>(e - lo)];
        if (e >= a.shift_) slot += a.coeffs_[static_cast<std::size_t>(e - a.shift_)];
        if (e >= b.shift_) slot += b.coeffs_[static_cast<std::size_t>(e - b.shift_)];
    }
    return LaurentSeries(lo, std::move(v), order);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    // a = t^va (unit + O(t^pa)), b likewise; the product is known to relative precision min(pa, pb).
    const long order = std::min(a.order_ + b.shift_, b.order_ + a.shift_);
    if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(order);
    const long lo = a.shift_ + b.shift_;
    const std::size_t n = static_cast<std::size_t>(order - lo);
    std::vector<Rational> v(n);
    for (std::size_t i = 0; i < std::min(n, a.coeffs_.size()); ++i) {
        const Rational& x = a.coeffs_[i];
        if (x.is_zero()) continue;
        for (std::size_t j = 0; i + j < n && j < b.coeffs_.size(); ++j) {
            const Rational& y = b.coeffs_[j];
            if (!y.is_zero()) v[i + j] += x * y;
        }
    }
    return LaurentSeries(lo, std::move(v), order);
}

Rational coeff(const LaurentSeries& s, long e) { return s.coeff(e); }

LaurentSeries series_pow(const LaurentSeries& s, long e) {
    if (s.is_zero()) {
        if (e < 0) throw NonInvertible("negative power of a series that is zero to working order");
        if (e == 0) return LaurentSeries::monomial(Rational(1), 0, std::max(1L, s.order()));
        return LaurentSeries::zero(e * s.order());
    }
    // Power of the unit part u = s / t^v via u * (u^e)' = e * u' * u^e.
    const auto& u = s.coefficients();
    const std::size_t n = u.size();
    std::vector<Rational> b(n);
    b[0] = pow(u[0], e);
    const Rational inv0 = Rational(1) / u[0];
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc;
        const long kk = static_cast<long>(k);
        for (std::size_t j = 1; j <= k; ++j) {
            if (u[j].is_zero()) continue;
            const long w = (e + 1) * static_cast<long>(j) - kk;
            if (w != 0) acc += Rational(w) * u[j] * b[k - j];
        }
        b[k] = acc * inv0 / Rational(kk);
    }
    const long lo = e * s.shift();
    return LaurentSeries(lo, std::move(b), lo + static_cast<long>(n));
}

LaurentSeries exp_series(const Rational& c, long order) {
    if (order <= 0) return LaurentSeries::zero(order);
    std::vector<Rational> v(static_cast<std::size_t>(order));
    v[0] = Rational(1);
    for (long k = 1; k < order; ++k) v[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(k - 1)] * c / Rational(k);
    return LaurentSeries(0, std::move(v), order);
}

}  // namespace pairs
