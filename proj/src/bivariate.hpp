#pragma once

// Power series in an outer variable (eta or y) whose coefficients are
// truncated power series in t. Used by the residue and substitution routes
// for N_i; not part of the public interface.

#include <algorithm>
#include <vector>

#include "pairs/errors.hpp"
#include "pairs/laurent_series.hpp"

namespace pairs::detail {

class Bivariate {
public:
    /// Zero series known for outer exponents < outer_order, inner exponents < inner_order.
    Bivariate(long outer_order, long inner_order)
        : inner_order_(inner_order), terms_(static_cast<std::size_t>(outer_order), LaurentSeries::zero(inner_order)) {}

    /// A series in the outer variable with constant (t-free) coefficients.
    static Bivariate from_outer(const LaurentSeries& s, long outer_order, long inner_order) {
        Bivariate out(outer_order, inner_order);
        for (long k = 0; k < outer_order; ++k) {
            out.terms_[static_cast<std::size_t>(k)] = LaurentSeries::monomial(s.coeff(k), 0, inner_order);
        }
        return out;
    }

    /// A t-series sitting at outer exponent zero.
    static Bivariate from_inner(const LaurentSeries& s, long outer_order) {
        Bivariate out(outer_order, s.order());
        if (outer_order > 0) out.terms_[0] = s;
        return out;
    }

    [[nodiscard]] long outer_order() const { return static_cast<long>(terms_.size()); }
    [[nodiscard]] long inner_order() const { return inner_order_; }

    [[nodiscard]] const LaurentSeries& coeff(long k) const {
        if (k < 0 || k >= outer_order()) throw OutOfWindow("outer coefficient outside the working window");
        return terms_[static_cast<std::size_t>(k)];
    }
    void set(long k, LaurentSeries s) { terms_[static_cast<std::size_t>(k)] = s.truncated(inner_order_); }

    Bivariate& operator+=(const Bivariate& o) {
        for (long k = 0; k < std::min(outer_order(), o.outer_order()); ++k) {
            terms_[static_cast<std::size_t>(k)] = terms_[static_cast<std::size_t>(k)] + o.coeff(k);
        }
        terms_.resize(static_cast<std::size_t>(std::min(outer_order(), o.outer_order())), LaurentSeries::zero(inner_order_));
        return *this;
    }

    Bivariate& operator*=(const LaurentSeries& inner) {
        for (auto& s : terms_) s = (s * inner).truncated(inner_order_);
        return *this;
    }

    friend Bivariate operator+(Bivariate a, const Bivariate& b) { return a += b; }
    friend Bivariate operator*(Bivariate a, const LaurentSeries& s) { return a *= s; }

    friend Bivariate operator*(const Bivariate& a, const Bivariate& b) {
        const long n = std::min(a.outer_order(), b.outer_order());
        Bivariate out(n, std::min(a.inner_order_, b.inner_order_));
        for (long i = 0; i < n; ++i) {
            const LaurentSeries& x = a.coeff(i);
            if (x.is_zero()) continue;
            for (long j = 0; i + j < n; ++j) {
                const LaurentSeries& y = b.coeff(j);
                if (y.is_zero()) continue;
                auto& slot = out.terms_[static_cast<std::size_t>(i + j)];
                slot = slot + (x * y).truncated(out.inner_order_);
            }
        }
        return out;
    }

    [[nodiscard]] Bivariate pow(unsigned e) const {
        Bivariate result(outer_order(), inner_order_);
        if (outer_order() == 0) return result;
        result.terms_[0] = LaurentSeries::monomial(Rational(1), 0, inner_order_);
        for (unsigned k = 0; k < e; ++k) result = result * (*this);
        return result;
    }

private:
    long inner_order_;
    std::vector<LaurentSeries> terms_;
};

}  // namespace pairs::detail
