#include "pairs/poincare.hpp"

#include <map>

#include "bivariate.hpp"
#include "pairs/errors.hpp"
#include "pairs/numerology.hpp"

namespace pairs {

using detail::Bivariate;

bool is_betti(const BettiPoly& p) { return p.has_integer_coefficients() && p.has_nonnegative_coefficients(); }

bool is_palindrome(const BettiPoly& p, long complex_dim) {
    if (p.degree() != 2 * complex_dim) return false;
    return p.reversed() == p;
}

namespace {

Polynomial t_pow(long k) { return Polynomial::monomial(Rational(1), static_cast<int>(k)); }

void require_integral(const Polynomial& p, const char* what) {
    if (!p.has_integer_coefficients()) throw NonInteger(std::string(what) + " has a non-integer Betti number");
}

}  // namespace

BettiPoly p_symprod(long j, long g) {
    if (j < 0 || g < 0) throw OutOfRange("p_symprod needs j, g >= 0");
    // Coeff_{x^j}: choose x^p from (1+xt)^(2g), the rest from 1/((1-x)(1-xt^2)).
    Polynomial out;
    for (long p = 0; p <= std::min(j, 2 * g); ++p) {
        Polynomial geometric;
        for (long b = 0; b <= j - p; ++b) geometric += t_pow(2 * b);
        out += geometric.shifted(static_cast<int>(p)) * Rational(binomial(2 * g, p));
    }
    return out;
}

BettiPoly p_symprod_oracle(long j, long g) {
    if (j < 0 || g < 0 || 2 * g > 30) throw OutOfRange("p_symprod_oracle needs small j, g >= 0");
    std::map<long, long> counts;
    const unsigned long subsets = 1UL << (2 * g);
    for (unsigned long mask = 0; mask < subsets; ++mask) {
        const long odd = __builtin_popcountl(mask);
        if (odd > j) continue;
        // x^a y^b with a + b = j - |I|: x has degree 0, y degree 2.
        for (long b = 0; b <= j - odd; ++b) ++counts[2 * b + odd];
    }
    std::vector<Rational> coeffs;
    for (const auto& [deg, c] : counts) {
        if (static_cast<long>(coeffs.size()) <= deg) coeffs.resize(static_cast<std::size_t>(deg + 1));
        coeffs[static_cast<std::size_t>(deg)] = Rational(c);
    }
    return Polynomial(std::move(coeffs));
}

namespace {

void check_chamber(long i, long d, long g) {
    if (g < 0 || d < 1) throw OutOfRange("moduli of pairs need d >= 1, g >= 0");
    if (i < 0 || i > last_chamber(d)) throw InvalidChamber("chamber index outside 0..w");
}

}  // namespace

BettiPoly p_pairs_moduli(long i, long d, long g) {
    check_chamber(i, d, g);
    const long top = 2 * d + 2 * g - 2;
    const long window = top + 1;  // every x^i coefficient has t-degree <= top
    const long xo = i + 1;

    // (1 + x t)^(2g) / ((1 - x)(1 - x t^2)) as an x-series with t-coefficients.
    Bivariate gen(xo, window);
    for (long k = 0; k < xo; ++k) {
        gen.set(k, LaurentSeries::monomial(Rational(binomial(2 * g, k)), k, window));
    }
    Bivariate geo1(xo, window);
    Bivariate geo2(xo, window);
    for (long k = 0; k < xo; ++k) {
        geo1.set(k, LaurentSeries::monomial(Rational(1), 0, window));
        geo2.set(k, LaurentSeries::monomial(Rational(1), 2 * k, window));
    }
    // t^(top-4i)/(x t^4 - 1) - t^(2i+2)/(x - t^2), coefficientwise in x.
    Bivariate kernel(xo, window);
    for (long k = 0; k < xo; ++k) {
        kernel.set(k, LaurentSeries::monomial(Rational(1), 2 * i - 2 * k, window) -
                          LaurentSeries::monomial(Rational(1), top - 4 * i + 4 * k, window));
    }
    const Bivariate product = kernel * gen * geo1 * geo2;
    const Polynomial numerator = product.coeff(i).to_polynomial();
    Polynomial out = numerator.exact_div(Polynomial{1, 0, -1});
    require_integral(out, "P_t(M_i)");
    return out;
}

BettiPoly p_pairs_moduli_sum(long i, long d, long g) {
    check_chamber(i, d, g);
    const long top = 2 * d + 2 * g - 2;
    Polynomial numerator;
    for (long j = 0; j <= i; ++j) {
        numerator += (t_pow(2 * j) - t_pow(top - 4 * j)) * p_symprod(j, g);
    }
    Polynomial out = numerator.exact_div(Polynomial{1, 0, -1});
    require_integral(out, "P_t(M_i)");
    return out;
}

BettiPoly p_bundles_HN(long g) {
    if (g < 2) throw OutOfRange("Harder-Narasimhan formula needs g >= 2");
    const Polynomial num = Polynomial{1, 0, 0, 1}.pow(static_cast<unsigned>(2 * g)) -
                           (Polynomial{1, 1}.pow(static_cast<unsigned>(2 * g))).shifted(static_cast<int>(2 * g));
    const Polynomial den = Polynomial{1, 0, -1} * Polynomial{1, 0, 0, 0, -1};
    Polynomial out = num.exact_div(den);
    require_integral(out, "P_t(N)");
    return out;
}

BettiPoly p_bundles_from_pairs(long g, long d) {
    if (g < 2) throw OutOfRange("bundle moduli need g >= 2");
    if (d % 2 == 0 || d <= 4 * g - 4) throw OutOfRange("need d odd and d > 4g - 4");
    const Polynomial pw = p_pairs_moduli(last_chamber(d), d, g);
    const Polynomial geometric = one_minus_t_pow(static_cast<int>(2 * d - 4 * g + 4), 1);
    Polynomial out = (pw * Polynomial{1, 0, -1}).exact_div(geometric);
    require_integral(out, "P_t(N)");
    return out;
}

namespace {

/// sum_e c_e t^e as a rational function.
RationalLaurent from_exponent_map(const std::map<long, Rational>& terms) {
    if (terms.empty()) return {};
    const long low = terms.begin()->first;
    std::vector<Rational> coeffs(static_cast<std::size_t>(terms.rbegin()->first - low + 1));
    for (const auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e - low)] += c;
    return {low, Polynomial(std::move(coeffs)), Polynomial::constant(Rational(1))};
}

RationalLaurent coefficient_route(long e1, long e2, long e3, long g) {
    const long top = 2 * g - 2;
    std::map<long, Rational> terms;
    // Coeff_{x^top} = sum_p C(2g,p) t^p h_{top-p}(a,b,c), h the complete symmetric sum.
    for (long p = 0; p <= std::min(top, 2 * g); ++p) {
        const Rational c(binomial(2 * g, p));
        const long rest = top - p;
        for (long q = 0; q <= rest; ++q) {
            for (long r = 0; q + r <= rest; ++r) {
                const long s = rest - q - r;
                terms[p + q * e1 + r * e2 + s * e3] += c;
            }
        }
    }
    return from_exponent_map(terms);
}

RationalLaurent closed_route(long e1, long e2, long e3, long g) {
    const RationalLaurent t = RationalLaurent::monomial(Rational(1), 1);
    const long es[3] = {e1, e2, e3};
    RationalLaurent sum;
    for (int k = 0; k < 3; ++k) {
        const RationalLaurent a = RationalLaurent::monomial(Rational(1), es[k]);
        const RationalLaurent b = RationalLaurent::monomial(Rational(1), es[(k + 1) % 3]);
        const RationalLaurent c = RationalLaurent::monomial(Rational(1), es[(k + 2) % 3]);
        RationalLaurent numerator = RationalLaurent::monomial(Rational(1), 0);
        const RationalLaurent base = a + t;
        for (long j = 0; j < 2 * g; ++j) numerator = numerator * base;
        sum = sum + numerator / ((a - b) * (a - c));
    }
    return sum;
}

}  // namespace

std::pair<RationalLaurent, RationalLaurent> F_abc(long e1, long e2, long e3, long g) {
    if (e1 == e2 || e2 == e3 || e1 == e3) throw DegenerateParameters("F(a,b,c,t) needs pairwise distinct a, b, c");
    if (g < 1) throw OutOfRange("F(a,b,c,t) needs g >= 1");
    return {coefficient_route(e1, e2, e3, g), closed_route(e1, e2, e3, g)};
}

RationalLaurent hn_from_F(long g) {
    if (g < 2) throw OutOfRange("Harder-Narasimhan formula needs g >= 2");
    const RationalLaurent lhs = RationalLaurent::monomial(Rational(1), 4 * g - 4) * F_abc(0, 2, -2, g).first -
                                RationalLaurent::monomial(Rational(1), 2 * g) * F_abc(0, 2, 4, g).first;
    return lhs / RationalLaurent::from_polynomial(one_minus_t_pow(static_cast<int>(4 * g - 2), 1));
}

}  // namespace pairs
