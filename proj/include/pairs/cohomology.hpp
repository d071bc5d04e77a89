#pragma once

#include <vector>

#include "pairs/laurent_series.hpp"
#include "pairs/rational.hpp"

namespace pairs {

/// A class in H*(X_i) for the i-th symmetric product of a genus-g curve.
///
/// Stored as sum_k P_k(eta) sigma^k / k!, where sigma = sum_j sigma_j and
/// sigma^k / k! is the k-th elementary symmetric polynomial in the sigma_j.
/// Level k keeps eta-degrees 0..i-k only: anything above has real degree
/// greater than dim_R X_i and vanishes. Levels stop at min(g, i).
class CohClass {
public:
    CohClass(int genus, int index);

    static CohClass scalar(int genus, int index, const Rational& c);
    /// A(eta) for a power series A known at least through eta^index.
    static CohClass from_eta_series(int genus, int index, const LaurentSeries& a);
    static CohClass eta_power(int genus, int index, int a);
    /// sigma^k / k!.
    static CohClass sigma_power(int genus, int index, int k);

    [[nodiscard]] int genus() const { return genus_; }
    [[nodiscard]] int index() const { return index_; }
    [[nodiscard]] int sigma_cap() const { return cap_; }

    /// Coefficient of eta^a sigma^k / k!.
    [[nodiscard]] Rational coefficient(int k, int a) const;
    [[nodiscard]] Rational scalar_part() const { return coefficient(0, 0); }
    /// Number of sigma-levels currently stored (trailing zero levels trimmed).
    [[nodiscard]] int levels() const { return static_cast<int>(table_.size()); }
    [[nodiscard]] bool is_zero() const { return table_.empty(); }

    CohClass& operator+=(const CohClass& o);
    CohClass& operator-=(const CohClass& o);
    CohClass& operator*=(const Rational& c);

    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
    friend CohClass operator*(CohClass a, const Rational& c) { return a *= c; }
    friend CohClass operator*(const Rational& c, CohClass a) { return a *= c; }
    friend CohClass operator*(const CohClass& a, const CohClass& b);

    friend bool operator==(const CohClass&, const CohClass&) = default;

private:
    void check_compatible(const CohClass& o) const;
    void trim();
    std::vector<Rational>& level(int k);

    int genus_;
    int index_;
    int cap_;
    std::vector<std::vector<Rational>> table_;
};

/// <c, X_i> = sum_k C(g, k) [eta^(i-k)] P_k.
Rational pair(const CohClass& c);

CohClass class_mul(const CohClass& a, const CohClass& b);

/// exp(B(eta) sigma) = sum_k B^k sigma^k / k!.
CohClass class_exp_sigma(const LaurentSeries& b, int index, int genus);

/// td X_i = (eta / (1 - e^-eta))^(i-g+1) exp(sigma / (e^eta - 1) - sigma / eta).
CohClass todd_symprod(int index, int genus);

/// ch pi_! M(k Delta) = ((deg M + k i + 1 - g) - k^2 sigma) e^(k eta).
CohClass ch_pushforward(long deg_m, long k, int index, int genus);

/// ch(L_i^m) ch(Lambda^i W^-_i).
CohClass ch_line_factors(long m, long n, int index, long d, int genus);

/// ch(U_i) = (d-i+1-2g) e^-eta + (2g-2) e^-2eta + sum_j e^(-eta - sigma_j).
CohClass ch_U(int index, long d, int genus);

/// Power series in an auxiliary variable t with CohClass coefficients,
/// known for t-exponents below order().
class ClassSeries {
public:
    ClassSeries(int genus, int index, long order);
    ClassSeries(std::vector<CohClass> terms, long order);

    [[nodiscard]] long order() const { return order_; }
    /// Throws OutOfWindow for q >= order().
    [[nodiscard]] const CohClass& coeff(long q) const;
    void set(long q, CohClass c);

    friend ClassSeries operator+(const ClassSeries& a, const ClassSeries& b);
    friend ClassSeries operator*(const ClassSeries& a, const ClassSeries& b);

private:
    int genus_;
    int index_;
    long order_;
    std::vector<CohClass> terms_;
};

/// sum_k ch(S^k U_i) t^k, to the given t-order.
ClassSeries sym_U_generating_series(int index, long d, int genus, long order);

/// ch(S^q U_i).
CohClass ch_sym_U(long q, int index, long d, int genus);

/// N_i = <ch(L_i^m (x) Lambda^i W^-_i (x) S^(q_i - i) U_i) td X_i, X_i>, by Riemann-Roch
/// in the cohomology ring. Zero when q_i - i < 0.
Rational ni_ring(int index, long m, long n, long d, int genus);

}  // namespace pairs
