#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pairs/bigfloat.hpp"
#include "pairs/rational.hpp"
#include "pairs/rational_laurent.hpp"

namespace pairs {

struct FSpec {
    long g;
    long d;
    long m;
    long n;

    [[nodiscard]] long h() const;
    [[nodiscard]] long h_prime() const;
    /// m(d-2) - 2n > -d + 2g - 2, equivalently h > h'.
    [[nodiscard]] bool in_region() const;
};

/// F(t) = (1-t^(m+2))^(-h-1) (1-t^(m+1))^(-h'-1) P(t)^g / ((1-t)^(d+g-1) t^(m+n)),
/// P(t) = 1 - (2m+3)(1-t)t^(m+1) - t^(2m+3). Throws OutOfRange for m or n < 0.
RationalLaurent F_build(const FSpec& spec);

/// Constant term of F at t = 0. Throws RegionViolation outside the region.
Integer dimv_residue(const FSpec& spec);

/// sum_{i=0}^{b} (-1)^i N_i, with N_{b+1} = 0 checked. Throws RegionViolation.
Integer dimv_sum(const FSpec& spec);

enum class DimStatus { residue_region, zero_m_negative, binomial_n_negative, zero_unstable, outside_region };
std::string_view to_string(DimStatus s);

enum class DimRoutes { all, residue, sum };

struct DimResult {
    DimStatus status;
    std::optional<Integer> value;
    std::vector<std::pair<std::string, Integer>> trace;
};

/// Region dispatcher; never throws for region gaps (they are a status).
/// In the residue region with DimRoutes::all, throws RouteMismatch if the routes differ.
DimResult dimv(long g, long d, long m, long n, DimRoutes routes = DimRoutes::all);

enum class Parity { even, odd };
std::string_view to_string(Parity p);

struct VerlindeQuery {
    long g;
    long k;
    Parity parity;
};

/// The smallest degree > 2g - 2 with the query's parity.
long canonical_degree(const VerlindeQuery& q);

/// Z_k = V_{k, k(d/2-1)} at the canonical degree; 0 when k and d are both odd.
Integer verlinde_exact(const VerlindeQuery& q);
/// Same, at an explicit degree d > 2g - 2 of the query's parity.
Integer verlinde_exact_at(const VerlindeQuery& q, long d);

/// ((k+2)/2)^(g-1) sum_{j=1}^{k+1} (-1)^(d(j+1)) / sin(j pi / (k+2))^(2g-2).
Real verlinde_trig(const VerlindeQuery& q, long precision_digits);

struct ResidueCheck {
    Real defect;
    /// Digits actually used (after any precision doubling).
    long digits;
    /// Number of roots of unity that carried a pole.
    long poles;
};

/// |2 dim V + sum of residues of F(t) dt/t at nontrivial (m+1)-th and (m+2)-th
/// roots of unity|. Doubles precision up to twice if the defect exceeds
/// 10^(-digits/2); throws PrecisionInsufficient if it still does.
ResidueCheck residue_sum_check(const FSpec& spec, long precision_digits);

}  // namespace pairs
