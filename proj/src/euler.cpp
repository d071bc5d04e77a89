#include "pairs/euler.hpp"

#include "bivariate.hpp"
#include "pairs/errors.hpp"
#include "pairs/numerology.hpp"

namespace pairs {

using detail::Bivariate;

std::string_view to_string(ResidueSign s) { return s == ResidueSign::minus ? "(1-t)^(2g-2)" : "(1+t)^(2g-2)"; }

std::string_view to_string(AyExponent e) {
    return e == AyExponent::reconciled ? "(1+ty)^(-h-1) (1+y)^(h+d-2g+1)" : "(1+ty)^(q-1) (1+y)^(-q+d-2g+1), q=-h/2";
}

namespace {

LaurentSeries linear_t(long c0, long c1, long order) {
    return LaurentSeries::from_polynomial(Polynomial{c0, c1}, order);
}

// (e^-eta - t)^a = sum_k C(a, k) (e^-eta - 1)^k (1 - t)^(a - k)
Bivariate e_minus_t_power(long a, long eta_order, long t_order) {
    const LaurentSeries delta = exp_series(Rational(-1), eta_order) - LaurentSeries::monomial(Rational(1), 0, eta_order);
    const LaurentSeries one_minus_t = linear_t(1, -1, t_order);
    Bivariate out(eta_order, t_order);
    LaurentSeries delta_pow = LaurentSeries::monomial(Rational(1), 0, eta_order);
    for (long k = 0; k < eta_order; ++k) {
        if (k > 0) delta_pow = (delta_pow * delta).truncated(eta_order);
        const Rational c = gen_binomial(a, k);
        if (c.is_zero()) continue;
        out += Bivariate::from_outer(delta_pow, eta_order, t_order) * (series_pow(one_minus_t, a - k) * c);
    }
    return out;
}

}  // namespace

Rational ni_residue(int index, long m, long n, long d, int genus, ResidueOptions options) {
    const long q = sym_power_index(index, m, n);
    if (q < 0) return {};
    const long g = genus;
    const long h = h_exponent(d, m, n);
    const long eta_order = options.eta_order > 0 ? options.eta_order : index + 2 * g + 2;
    const long t_order = q + 1;

    const LaurentSeries exp_neg = exp_series(Rational(-1), eta_order);
    const LaurentSeries one = LaurentSeries::monomial(Rational(1), 0, eta_order);
    const LaurentSeries one_minus_exp = one - exp_neg;  // 1 - e^-eta, valuation 1

    // 1 / (1 - e^-eta)^(i+1) = eta^-(i+1) * ((1 - e^-eta)/eta)^-(i+1)
    const LaurentSeries one_minus_exp_wide =
        LaurentSeries::monomial(Rational(1), 0, eta_order + 1) - exp_series(Rational(-1), eta_order + 1);
    const LaurentSeries pole_unit = series_pow(one_minus_exp_wide.shifted(-1), -(index + 1));

    Bivariate integrand = Bivariate::from_outer(exp_series(Rational(h), eta_order), eta_order, t_order) *
                          Bivariate::from_outer(pole_unit, eta_order, t_order);
    integrand = integrand * e_minus_t_power(-d + index - 1 + g, eta_order, t_order);

    const long sgn = options.sign == ResidueSign::minus ? -1 : 1;
    integrand *= series_pow(linear_t(1, sgn, t_order), -(2 * g - 2));

    // e^-eta + (2m + 3 - t/(e^-eta - t)) (1 - e^-eta)
    const LaurentSeries base = exp_neg + one_minus_exp * Rational(2 * m + 3);
    Bivariate bracket = Bivariate::from_outer(base, eta_order, t_order);
    const Bivariate correction = Bivariate::from_outer(one_minus_exp, eta_order, t_order) *
                                 e_minus_t_power(-1, eta_order, t_order) *
                                 LaurentSeries::monomial(Rational(-1), 1, t_order);
    bracket += correction;
    integrand = integrand * bracket.pow(static_cast<unsigned>(g));

    // Res_{eta=0} picks eta^i of the regular part.
    return integrand.coeff(index).coeff(q);
}

Rational ni_y(int index, long m, long n, long d, int genus, AyExponent exponent) {
    const long q = sym_power_index(index, m, n);
    if (q < 0) return {};
    const long g = genus;
    const long h = h_exponent(d, m, n);
    long e_ty = -h - 1;
    long e_y = h + d - 2 * g + 1;
    if (exponent == AyExponent::half) {
        if (h % 2 != 0) throw InputError("half-exponent form of a(y) needs even h");
        const long qd = -h / 2;
        e_ty = qd - 1;
        e_y = -qd + d - 2 * g + 1;
    }
    const long y_order = index + 1;
    const long t_order = q + 1;

    Bivariate ty_power(y_order, t_order);  // (1 + t y)^e_ty
    for (long k = 0; k < y_order; ++k) {
        ty_power.set(k, LaurentSeries::monomial(gen_binomial(e_ty, k), k, t_order));
    }
    std::vector<Rational> y_coeffs(static_cast<std::size_t>(y_order));
    for (long k = 0; k < y_order; ++k) y_coeffs[static_cast<std::size_t>(k)] = gen_binomial(e_y, k);
    const LaurentSeries y_power(0, std::move(y_coeffs), y_order);  // (1 + y)^e_y

    Bivariate quad(y_order, t_order);  // 1 + (2m+3)(1-t) y - t y^2
    quad.set(0, LaurentSeries::monomial(Rational(1), 0, t_order));
    if (y_order > 1) quad.set(1, linear_t(2 * m + 3, -(2 * m + 3), t_order));
    if (y_order > 2) quad.set(2, LaurentSeries::monomial(Rational(-1), 1, t_order));

    Bivariate a = ty_power * Bivariate::from_outer(y_power, y_order, t_order) * quad.pow(static_cast<unsigned>(g));
    a *= series_pow(linear_t(1, -1, t_order), -(d + g - 1));
    return a.coeff(index).coeff(q);
}

}  // namespace pairs
