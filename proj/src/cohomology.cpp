#include "pairs/cohomology.hpp"

#include <algorithm>

#include "pairs/errors.hpp"
#include "pairs/numerology.hpp"

namespace pairs {

namespace {

std::size_t level_size(int index, int k) { return static_cast<std::size_t>(index - k + 1); }

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

// (1 - e^-x) / x = sum_k (-1)^k x^k / (k+1)!
LaurentSeries one_minus_exp_neg_over_x(long order) {
    std::vector<Rational> v(static_cast<std::size_t>(order));
    Rational fact = 1;
    for (long k = 0; k < order; ++k) {
        fact *= Rational(k + 1);
        v[static_cast<std::size_t>(k)] = Rational(k % 2 == 0 ? 1 : -1) / fact;
    }
    return LaurentSeries(0, std::move(v), order);
}

// (e^x - 1) / x = sum_k x^k / (k+1)!
LaurentSeries exp_minus_one_over_x(long order) {
    std::vector<Rational> v(static_cast<std::size_t>(order));
    Rational fact = 1;
    for (long k = 0; k < order; ++k) {
        fact *= Rational(k + 1);
        v[static_cast<std::size_t>(k)] = Rational(1) / fact;
    }
    return LaurentSeries(0, std::move(v), order);
}

}  // namespace

// ---------------------------------------------------------------------------
// CohClass

CohClass::CohClass(int genus, int index) : genus_(genus), index_(index), cap_(std::min(genus, index)) {
    if (genus < 0 || index < 0) throw InputError("CohClass needs genus >= 0 and index >= 0");
}

CohClass CohClass::scalar(int genus, int index, const Rational& c) {
    CohClass out(genus, index);
    if (!c.is_zero()) out.level(0)[0] = c;
    return out;
}

CohClass CohClass::from_eta_series(int genus, int index, const LaurentSeries& a) {
    CohClass out(genus, index);
    auto& lv = out.level(0);
    for (int e = 0; e <= index; ++e) lv[static_cast<std::size_t>(e)] = a.coeff(e);
    out.trim();
    return out;
}

CohClass CohClass::eta_power(int genus, int index, int a) {
    CohClass out(genus, index);
    if (a >= 0 && a <= index) out.level(0)[static_cast<std::size_t>(a)] = Rational(1);
    out.trim();
    return out;
}

CohClass CohClass::sigma_power(int genus, int index, int k) {
    CohClass out(genus, index);
    if (k >= 0 && k <= out.cap_) out.level(k)[0] = Rational(1);
    return out;
}

std::vector<Rational>& CohClass::level(int k) {
    while (static_cast<int>(table_.size()) <= k) {
        table_.emplace_back(level_size(index_, static_cast<int>(table_.size())));
    }
    return table_[static_cast<std::size_t>(k)];
}

void CohClass::trim() {
    while (!table_.empty() && all_zero(table_.back())) table_.pop_back();
}

void CohClass::check_compatible(const CohClass& o) const {
    if (genus_ != o.genus_ || index_ != o.index_) {
        throw InputError("cohomology classes live on different symmetric products");
    }
}

Rational CohClass::coefficient(int k, int a) const {
    if (k < 0 || k >= levels() || a < 0 || a > index_ - k) return {};
    return table_[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)];
}

CohClass& CohClass::operator+=(const CohClass& o) {
    check_compatible(o);
    for (int k = 0; k < o.levels(); ++k) {
        auto& dst = level(k);
        const auto& src = o.table_[static_cast<std::size_t>(k)];
        for (std::size_t a = 0; a < src.size(); ++a) dst[a] += src[a];
    }
    trim();
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
    check_compatible(o);
    for (int k = 0; k < o.levels(); ++k) {
        auto& dst = level(k);
        const auto& src = o.table_[static_cast<std::size_t>(k)];
        for (std::size_t a = 0; a < src.size(); ++a) dst[a] -= src[a];
    }
    trim();
    return *this;
}

CohClass& CohClass::operator*=(const Rational& c) {
    if (c.is_zero()) {
        table_.clear();
        return *this;
    }
    for (auto& lv : table_) {
        for (auto& x : lv) x *= c;
    }
    return *this;
}

CohClass operator*(const CohClass& a, const CohClass& b) {
    a.check_compatible(b);
    CohClass out(a.genus_, a.index_);
    const int idx = a.index_;
    for (int ka = 0; ka < a.levels(); ++ka) {
        const auto& pa = a.table_[static_cast<std::size_t>(ka)];
        if (all_zero(pa)) continue;
        for (int kb = 0; kb < b.levels() && ka + kb <= a.cap_; ++kb) {
            const auto& pb = b.table_[static_cast<std::size_t>(kb)];
            if (all_zero(pb)) continue;
            // (sigma^a/a!)(sigma^b/b!) = C(a+b, a) sigma^(a+b)/(a+b)!
            const Rational mult(binomial(ka + kb, ka));
            auto& dst = out.level(ka + kb);
            const int top = idx - ka - kb;
            for (int i = 0; i <= top; ++i) {
                const Rational& x = pa[static_cast<std::size_t>(i)];
                if (x.is_zero()) continue;
                for (int j = 0; i + j <= top; ++j) {
                    const Rational& y = pb[static_cast<std::size_t>(j)];
                    if (!y.is_zero()) dst[static_cast<std::size_t>(i + j)] += mult * x * y;
                }
            }
        }
    }
    out.trim();
    return out;
}

Rational pair(const CohClass& c) {
    Rational total;
    for (int k = 0; k < c.levels(); ++k) {
        const Rational x = c.coefficient(k, c.index() - k);
        if (!x.is_zero()) total += Rational(binomial(c.genus(), k)) * x;
    }
    return total;
}

CohClass class_mul(const CohClass& a, const CohClass& b) { return a * b; }

CohClass class_exp_sigma(const LaurentSeries& b, int index, int genus) {
    CohClass out(genus, index);
    const int cap = out.sigma_cap();
    const long order = index + 1;
    LaurentSeries power = LaurentSeries::monomial(Rational(1), 0, order);
    const LaurentSeries base = b.truncated(order);
    for (int k = 0; k <= cap; ++k) {
        if (k > 0) power = (power * base).truncated(order);
        out += CohClass::sigma_power(genus, index, k) * CohClass::from_eta_series(genus, index, power);
    }
    return out;
}

CohClass todd_symprod(int index, int genus) {
    const long order = index + 1;
    // eta / (1 - e^-eta) to the power i - g + 1
    const LaurentSeries h_pow = series_pow(one_minus_exp_neg_over_x(order), -(index - genus + 1));
    // 1/(e^eta - 1) - 1/eta = (eta/(e^eta - 1) - 1) / eta
    LaurentSeries bern = exp_minus_one_over_x(order + 1).inverse();
    bern = (bern - LaurentSeries::monomial(Rational(1), 0, order + 1)).shifted(-1);
    return CohClass::from_eta_series(genus, index, h_pow) * class_exp_sigma(bern, index, genus);
}

CohClass ch_pushforward(long deg_m, long k, int index, int genus) {
    const long order = index + 1;
    const CohClass rank_part =
        CohClass::scalar(genus, index, Rational(deg_m + k * index + 1 - genus)) -
        CohClass::sigma_power(genus, index, 1) * Rational(k * k);
    return rank_part * CohClass::from_eta_series(genus, index, exp_series(Rational(k), order));
}

CohClass ch_line_factors(long m, long /*n*/, int index, long d, int genus) {
    const long order = index + 1;
    auto exp_class = [&](long eta_coeff, long sigma_coeff) {
        return CohClass::from_eta_series(genus, index, exp_series(Rational(eta_coeff), order)) *
               class_exp_sigma(LaurentSeries::monomial(Rational(sigma_coeff), 0, order), index, genus);
    };
    const CohClass line = exp_class(m * (d - 2 * index), 2 * m);              // ch L_i^m
    const CohClass wedge = exp_class(d - 3 * index + 1 - genus, 3);           // ch Lambda^i W^-_i
    return line * wedge;
}

CohClass ch_U(int index, long d, int genus) {
    const long order = index + 1;
    const CohClass e1 = CohClass::from_eta_series(genus, index, exp_series(Rational(-1), order));
    const CohClass e2 = CohClass::from_eta_series(genus, index, exp_series(Rational(-2), order));
    // sum_j e^(-eta - sigma_j) = e^-eta (g - sigma), using sigma_j^2 = 0
    const CohClass odd = e1 * (CohClass::scalar(genus, index, Rational(genus)) - CohClass::sigma_power(genus, index, 1));
    return e1 * Rational(d - index + 1 - 2 * genus) + e2 * Rational(2 * genus - 2) + odd;
}

// ---------------------------------------------------------------------------
// ClassSeries

ClassSeries::ClassSeries(int genus, int index, long order)
    : genus_(genus), index_(index), order_(order),
      terms_(static_cast<std::size_t>(std::max(0L, order)), CohClass(genus, index)) {}

ClassSeries::ClassSeries(std::vector<CohClass> terms, long order)
    : genus_(terms.empty() ? 0 : terms.front().genus()),
      index_(terms.empty() ? 0 : terms.front().index()),
      order_(order),
      terms_(std::move(terms)) {
    if (static_cast<long>(terms_.size()) > order_) terms_.erase(terms_.begin() + order_, terms_.end());
    while (static_cast<long>(terms_.size()) < order_) terms_.emplace_back(genus_, index_);
}

const CohClass& ClassSeries::coeff(long q) const {
    if (q >= order_) {
        throw OutOfWindow("class series coefficient t^" + std::to_string(q) + " beyond order " + std::to_string(order_));
    }
    if (q < 0) throw InputError("class series has no negative t-powers");
    return terms_[static_cast<std::size_t>(q)];
}

void ClassSeries::set(long q, CohClass c) {
    if (q < 0 || q >= order_) throw OutOfWindow("class series slot out of window");
    terms_[static_cast<std::size_t>(q)] = std::move(c);
}

ClassSeries operator+(const ClassSeries& a, const ClassSeries& b) {
    ClassSeries out(a.genus_, a.index_, std::min(a.order_, b.order_));
    for (long q = 0; q < out.order_; ++q) out.terms_[static_cast<std::size_t>(q)] = a.coeff(q) + b.coeff(q);
    return out;
}

ClassSeries operator*(const ClassSeries& a, const ClassSeries& b) {
    ClassSeries out(a.genus_, a.index_, std::min(a.order_, b.order_));
    for (long p = 0; p < out.order_; ++p) {
        const CohClass& x = a.coeff(p);
        if (x.is_zero()) continue;
        for (long q = 0; p + q < out.order_; ++q) {
            const CohClass& y = b.coeff(q);
            if (!y.is_zero()) out.terms_[static_cast<std::size_t>(p + q)] += x * y;
        }
    }
    return out;
}

namespace {

// (1 - t e^(-c eta))^a as a class series.
ClassSeries one_minus_t_exp(long a, long c, int index, int genus, long order) {
    ClassSeries out(genus, index, order);
    for (long k = 0; k < order; ++k) {
        Rational coef = gen_binomial(a, k);
        if (k % 2 == 1) coef = -coef;
        if (coef.is_zero()) continue;
        out.set(k, CohClass::from_eta_series(genus, index, exp_series(Rational(-c * k), index + 1)) * coef);
    }
    return out;
}

}  // namespace

ClassSeries sym_U_generating_series(int index, long d, int genus, long order) {
    // Chern roots of U_i: -eta with multiplicity d-i+1-2g, -2eta with multiplicity 2g-2,
    // and -eta-sigma_j for j = 1..g.
    const ClassSeries first = one_minus_t_exp(-(d - index + 1 - 2 * genus), 1, index, genus, order);
    const ClassSeries second = one_minus_t_exp(-(2 * genus - 2), 2, index, genus, order);

    // prod_j (1 - t e^(-eta - sigma_j))^-1 = (1 - t e^-eta)^-g exp(-sigma t / (e^eta - t))
    const ClassSeries odd_scalar = one_minus_t_exp(-genus, 1, index, genus, order);
    ClassSeries exponent(genus, index, order);  // -t/(e^eta - t) = -sum_{k>=1} t^k e^(-k eta)
    for (long k = 1; k < order; ++k) {
        exponent.set(k, CohClass::from_eta_series(genus, index, exp_series(Rational(-k), index + 1)) * Rational(-1));
    }
    ClassSeries odd_exp(genus, index, order);
    odd_exp.set(0, CohClass::scalar(genus, index, Rational(1)));
    ClassSeries power = odd_exp;
    const int cap = std::min(genus, index);
    for (int s = 1; s <= cap; ++s) {
        power = power * exponent;
        ClassSeries term(genus, index, order);
        const CohClass sig = CohClass::sigma_power(genus, index, s);
        for (long q = 0; q < order; ++q) term.set(q, power.coeff(q) * sig);
        odd_exp = odd_exp + term;
    }
    return first * second * odd_scalar * odd_exp;
}

CohClass ch_sym_U(long q, int index, long d, int genus) {
    if (q < 0) throw InputError("ch_sym_U needs q >= 0");
    return sym_U_generating_series(index, d, genus, q + 1).coeff(q);
}

Rational ni_ring(int index, long m, long n, long d, int genus) {
    const long q = sym_power_index(index, m, n);
    if (q < 0) return {};
    const CohClass integrand =
        ch_line_factors(m, n, index, d, genus) * ch_sym_U(q, index, d, genus) * todd_symprod(index, genus);
    return pair(integrand);
}

}  // namespace pairs
