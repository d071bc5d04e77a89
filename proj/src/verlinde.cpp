#include "pairs/verlinde.hpp"

#include "pairs/chambers.hpp"
#include "pairs/cohomology.hpp"
#include "pairs/errors.hpp"
#include "pairs/numerology.hpp"

namespace pairs {

long FSpec::h() const { return h_exponent(d, m, n); }
long FSpec::h_prime() const { return h_prime_exponent(g, d, m, n); }
bool FSpec::in_region() const { return region_holds(g, d, m, n); }

namespace {

Polynomial p_factor(long m) {
    // 1 - (2m+3)(1-t) t^(m+1) - t^(2m+3)
    const int a = static_cast<int>(m + 1);
    Polynomial p = Polynomial::constant(Rational(1));
    p -= (Polynomial{1, -1} * Rational(2 * m + 3)).shifted(a);
    p -= Polynomial::monomial(Rational(1), static_cast<int>(2 * m + 3));
    return p;
}

/// (1 - t^k)^e split into numerator and denominator factors.
void attach(Polynomial& num, Polynomial& den, int k, long e) {
    if (e >= 0) {
        num = num * one_minus_t_pow(k, static_cast<unsigned>(e));
    } else {
        den = den * one_minus_t_pow(k, static_cast<unsigned>(-e));
    }
}

void require_nonnegative(const FSpec& s) {
    if (s.m < 0 || s.n < 0) throw OutOfRange("F(t) is defined for m, n >= 0");
}

}  // namespace

RationalLaurent F_build(const FSpec& spec) {
    require_nonnegative(spec);
    Polynomial num = p_factor(spec.m).pow(static_cast<unsigned>(spec.g));
    Polynomial den = Polynomial::constant(Rational(1));
    attach(num, den, static_cast<int>(spec.m + 2), -spec.h() - 1);
    attach(num, den, static_cast<int>(spec.m + 1), -spec.h_prime() - 1);
    attach(num, den, 1, -(spec.d + spec.g - 1));
    return {-(spec.m + spec.n), std::move(num), std::move(den)};
}

Integer dimv_residue(const FSpec& spec) {
    require_nonnegative(spec);
    if (!spec.in_region()) throw RegionViolation("m(d-2) - 2n > -d + 2g - 2 fails");
    return coeff(rat_expand(F_build(spec), 1), 0).to_integer();
}

Integer dimv_sum(const FSpec& spec) {
    const ChamberSpec cs = ChamberSpec::make(spec.g, spec.d);
    const long b = blowup_level_b(spec.m, spec.n, cs);
    const int g = static_cast<int>(spec.g);
    Rational total;
    for (long i = 0; i <= b; ++i) {
        const Rational term = ni_ring(static_cast<int>(i), spec.m, spec.n, spec.d, g);
        total += (i % 2 == 0) ? term : -term;
    }
    if (!ni_ring(static_cast<int>(b + 1), spec.m, spec.n, spec.d, g).is_zero()) {
        throw RouteMismatch("N_i does not vanish just above the blow-up level b");
    }
    return total.to_integer();
}

std::string_view to_string(DimStatus s) {
    switch (s) {
        case DimStatus::residue_region: return "residue_region";
        case DimStatus::zero_m_negative: return "zero_m_negative";
        case DimStatus::binomial_n_negative: return "binomial_n_negative";
        case DimStatus::zero_unstable: return "zero_unstable";
        case DimStatus::outside_region: return "outside_region";
    }
    return "?";
}

DimResult dimv(long g, long d, long m, long n, DimRoutes routes) {
    DimResult out{DimStatus::outside_region, std::nullopt, {}};
    if (m < 0) {
        out.status = DimStatus::zero_m_negative;
        out.value = Integer(0);
        return out;
    }
    if (n < 0) {
        out.status = DimStatus::binomial_n_negative;
        out.value = (m + n < 0) ? Integer(0) : binomial(m + n + d + g - 2, m + n);
        return out;
    }
    const FSpec spec{g, d, m, n};
    if (spec.in_region()) {
        out.status = DimStatus::residue_region;
        if (routes != DimRoutes::sum) out.trace.emplace_back("residue", dimv_residue(spec));
        if (routes != DimRoutes::residue) out.trace.emplace_back("sum", dimv_sum(spec));
        for (const auto& [route, v] : out.trace) {
            if (v != out.trace.front().second) {
                throw RouteMismatch("dim V routes disagree at g=" + std::to_string(g) + " d=" + std::to_string(d) +
                                    " m=" + std::to_string(m) + " n=" + std::to_string(n));
            }
        }
        out.value = out.trace.front().second;
        return out;
    }
    if (d >= 2 * g && spec.h() < 0) {
        out.status = DimStatus::zero_unstable;
        out.value = Integer(0);
    }
    return out;
}

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

long canonical_degree(const VerlindeQuery& q) { return q.parity == Parity::even ? 2 * q.g : 2 * q.g + 1; }

Integer verlinde_exact_at(const VerlindeQuery& q, long d) {
    if (q.g < 2 || q.k < 0) throw OutOfRange("Verlinde query needs g >= 2, k >= 0");
    if ((d % 2 == 0) != (q.parity == Parity::even)) throw InputError("degree parity does not match the query");
    if (d <= 2 * q.g - 2) throw OutOfRange("degree must exceed 2g - 2");
    if (q.k % 2 != 0 && d % 2 != 0) return Integer(0);
    const DimResult r = dimv(q.g, d, q.k, q.k * (d - 2) / 2);
    if (!r.value) throw RegionViolation("Verlinde level outside the residue region");
    return *r.value;
}

Integer verlinde_exact(const VerlindeQuery& q) { return verlinde_exact_at(q, canonical_degree(q)); }

Real verlinde_trig(const VerlindeQuery& q, long precision_digits) {
    if (q.g < 2 || q.k < 0) throw OutOfRange("Verlinde query needs g >= 2, k >= 0");
    const mpfr_prec_t bits = digits_to_bits(precision_digits);
    const Real pi = Real::pi(bits);
    const Real denom(q.k + 2, bits);
    Real sum(bits);
    for (long j = 1; j <= q.k + 1; ++j) {
        const Real s = sin(pi * Real(j, bits) / denom);
        const Real term = Real(1, bits) / pow(s, 2 * q.g - 2);
        const bool negative = q.parity == Parity::odd && (j + 1) % 2 != 0;
        sum = negative ? sum - term : sum + term;
    }
    return pow(Real(Rational(Integer(q.k + 2), Integer(2)), bits), q.g - 1) * sum;
}

namespace {

using CSeries = std::vector<Complex>;

CSeries cmul(const CSeries& a, const CSeries& b, std::size_t n, mpfr_prec_t bits) {
    CSeries out(n, Complex(bits));
    for (std::size_t i = 0; i < std::min(n, a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

Complex cpow(const Complex& z, long e, mpfr_prec_t bits) {
    Complex base = z;
    if (e < 0) {
        base = Complex(Rational(1), bits) / z;
        e = -e;
    }
    Complex result(Rational(1), bits);
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

/// u^e for a unit series u, by the recurrence k u0 b_k = sum_j ((e+1)j - k) u_j b_{k-j}.
CSeries cseries_pow(const CSeries& u, long e, std::size_t n, mpfr_prec_t bits) {
    CSeries b(n, Complex(bits));
    if (n == 0) return b;
    b[0] = cpow(u[0], e, bits);
    const Complex inv_u0 = Complex(Rational(1), bits) / u[0];
    for (std::size_t k = 1; k < n; ++k) {
        Complex acc(bits);
        for (std::size_t j = 1; j <= k && j < u.size(); ++j) {
            const long w = (e + 1) * static_cast<long>(j) - static_cast<long>(k);
            if (w == 0 || u[j].is_zero()) continue;
            acc = acc + u[j] * b[k - j] * Real(w, bits);
        }
        b[k] = acc * inv_u0 * Real(Rational(Integer(1), Integer(static_cast<long>(k))), bits);
    }
    return b;
}

/// Coefficients of p(zeta + u), zeta = exp(2 pi i r / M), through u^(n-1).
CSeries taylor_shift(const Polynomial& p, long r, long modulus, std::size_t n, mpfr_prec_t bits) {
    CSeries out(n, Complex(bits));
    for (int j = 0; j <= p.degree(); ++j) {
        const Rational& c = p.coefficients()[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        for (int k = 0; k <= j && static_cast<std::size_t>(k) < n; ++k) {
            const Rational w = c * Rational(binomial(j, k));
            out[static_cast<std::size_t>(k)] =
                out[static_cast<std::size_t>(k)] + Complex::root_of_unity(r * (j - k), modulus, bits) * Real(w, bits);
        }
    }
    return out;
}

Complex residue_at(const FSpec& s, long r, long modulus, mpfr_prec_t bits) {
    struct Factor {
        Polynomial base;
        long exponent;
        long vanishing;  // multiplicity of the zero of base at zeta
    };
    std::vector<Factor> factors;
    auto cyclo = [&](long k, long e) {
        // zeta^k = 1 iff modulus | r k; 1 - t^k then has a simple zero there.
        const long v = ((r * k) % modulus == 0) ? 1 : 0;
        factors.push_back({one_minus_t_pow(static_cast<int>(k), 1), e, v});
    };
    cyclo(s.m + 2, -s.h() - 1);
    cyclo(s.m + 1, -s.h_prime() - 1);
    cyclo(1, -(s.d + s.g - 1));
    factors.push_back({p_factor(s.m), s.g, 0});
    factors.push_back({Polynomial{0, 1}, -(s.m + s.n) - 1, 0});

    long valuation = 0;
    for (const auto& f : factors) valuation += f.vanishing * f.exponent;
    if (valuation >= 0) return Complex(bits);
    const auto n = static_cast<std::size_t>(-valuation);

    CSeries product(n, Complex(bits));
    product[0] = Complex(Rational(1), bits);
    for (const auto& f : factors) {
        CSeries local = taylor_shift(f.base, r, modulus, n + static_cast<std::size_t>(f.vanishing), bits);
        local.erase(local.begin(), local.begin() + f.vanishing);
        product = cmul(product, cseries_pow(local, f.exponent, n, bits), n, bits);
    }
    return product[n - 1];
}

Real defect_at(const FSpec& spec, const Integer& dim, mpfr_prec_t bits, long& poles) {
    Complex total(Rational(dim) * Rational(2), bits);
    poles = 0;
    for (long modulus : {spec.m + 1, spec.m + 2}) {
        for (long r = 1; r < modulus; ++r) {
            const Complex res = residue_at(spec, r, modulus, bits);
            if (!res.is_zero()) ++poles;
            total = total + res;
        }
    }
    return abs(total);
}

}  // namespace

ResidueCheck residue_sum_check(const FSpec& spec, long precision_digits) {
    if (precision_digits < 10) throw OutOfRange("residue check needs at least 10 digits");
    const Integer dim = dimv_residue(spec);
    long digits = precision_digits;
    for (int attempt = 0; attempt < 3; ++attempt, digits *= 2) {
        const mpfr_prec_t bits = digits_to_bits(digits);
        long poles = 0;
        Real defect = defect_at(spec, dim, bits, poles);
        const Real tolerance = pow(Real(10, bits), -(precision_digits / 2));
        if (defect < tolerance) return {std::move(defect), digits, poles};
    }
    throw PrecisionInsufficient("root-of-unity residue sum did not converge");
}

}  // namespace pairs
