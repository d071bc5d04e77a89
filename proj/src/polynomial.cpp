#include "pairs/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "pairs/errors.hpp"

namespace pairs {

namespace {

// Clears denominators: p = scaled / lcm.
struct ScaledIntegers {
    std::vector<Integer> values;
    std::vector<std::size_t> support;
    Integer lcm = 1;
};

ScaledIntegers clear_denominators(const std::vector<Rational>& coeffs) {
    ScaledIntegers out;
    for (const auto& c : coeffs) {
        if (!c.is_integer()) mpz_lcm(out.lcm.get_mpz_t(), out.lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    out.values.resize(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        out.support.push_back(k);
        if (out.lcm == 1) {
            out.values[k] = coeffs[k].raw().get_num();
        } else {
            out.values[k] = coeffs[k].raw().get_num() * (out.lcm / coeffs[k].raw().get_den());
        }
    }
    return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    if (degree < 0) throw InputError("monomial degree must be nonnegative");
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int Polynomial::valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    }
    return -1;
}

Rational Polynomial::coefficient(int k) const {
    if (k < 0 || k > degree()) return {};
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::shifted(int k) const {
    if (k < 0) return unshifted(-k);
    if (is_zero() || k == 0) return *this;
    Polynomial out;
    out.coeffs_.assign(static_cast<std::size_t>(k), Rational());
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

Polynomial Polynomial::unshifted(int k) const {
    if (k < 0) return shifted(-k);
    if (is_zero() || k == 0) return *this;
    for (int j = 0; j < k && j <= degree(); ++j) {
        if (!coeffs_[static_cast<std::size_t>(j)].is_zero()) {
            throw NotDivisible("polynomial is not divisible by t^" + std::to_string(k));
        }
    }
    if (k > degree()) return {};
    return Polynomial(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Polynomial Polynomial::reversed() const {
    std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

bool Polynomial::has_nonnegative_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.sign() >= 0; });
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (degree() < divisor.degree()) return {Polynomial(), *this};
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
    const Rational& lead = divisor.leading();
    for (int k = degree(); k >= dd; --k) {
        const Rational& top = rem[static_cast<std::size_t>(k)];
        if (top.is_zero()) continue;
        const Rational q = top / lead;
        quot[static_cast<std::size_t>(k - dd)] = q;
        for (int j = 0; j <= dd; ++j) {
            const Rational& dj = divisor.coeffs_[static_cast<std::size_t>(j)];
            if (!dj.is_zero()) rem[static_cast<std::size_t>(k - dd + j)] -= q * dj;
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) {
        throw NotDivisible("(" + str() + ") is not divisible by (" + divisor.str() + ")");
    }
    return q;
}

std::string Polynomial::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0) {
            os << mag.str();
            continue;
        }
        if (!unit) {
            if (mag.is_integer()) {
                os << mag.str();
            } else {
                os << "(" << mag.str() << ")";
            }
        }
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Integer convolution over the supports, then a single rescale.
    ScaledIntegers sa = clear_denominators(a.coeffs_);
    ScaledIntegers sb = clear_denominators(b.coeffs_);
    if (sa.support.size() > sb.support.size()) std::swap(sa, sb);
    std::vector<Integer> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i : sa.support) {
        const mpz_srcptr x = sa.values[i].get_mpz_t();
        for (std::size_t j : sb.support) {
            mpz_addmul(acc[i + j].get_mpz_t(), x, sb.values[j].get_mpz_t());
        }
    }
    const Integer scale = sa.lcm * sb.lcm;
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (auto& z : acc) {
        if (scale == 1) {
            out.emplace_back(z);
        } else {
            out.emplace_back(z, scale);
        }
    }
    return Polynomial(std::move(out));
}

Polynomial one_minus_t_pow(int k, unsigned e) {
    if (k < 1) throw InputError("one_minus_t_pow needs k >= 1");
    std::vector<Rational> v(static_cast<std::size_t>(k) * e + 1);
    for (unsigned j = 0; j <= e; ++j) {
        Integer c = binomial(static_cast<long>(e), static_cast<long>(j));
        if (j % 2 == 1) c = -c;
        v[static_cast<std::size_t>(k) * j] = Rational(c);
    }
    return Polynomial(std::move(v));
}

}  // namespace pairs
