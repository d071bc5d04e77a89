#pragma once

// Integer bookkeeping shared by the chamber, Euler-characteristic and
// dimension code. Everything here is a one-line formula, kept in one place so
// that no two modules can drift apart.

namespace pairs {

/// w = floor((d - 1) / 2), the index of the last chamber.
constexpr long last_chamber(long d) { return (d - 1) / 2; }

/// q_i = n - (i - 1) m.
constexpr long q_index(long i, long m, long n) { return n - (i - 1) * m; }

/// q_i - i = (m + n) - (m + 1) i, the symmetric power taken of U_i.
constexpr long sym_power_index(long i, long m, long n) { return (m + n) - (m + 1) * i; }

/// h = (d - 2) m - 2 n.
constexpr long h_exponent(long d, long m, long n) { return (d - 2) * m - 2 * n; }

/// h' = -h - d + 2g - 2.
constexpr long h_prime_exponent(long g, long d, long m, long n) { return -h_exponent(d, m, n) - d + 2 * g - 2; }

/// The standing region condition m(d - 2) - 2n > -d + 2g - 2.
constexpr bool region_holds(long g, long d, long m, long n) { return h_exponent(d, m, n) > -d + 2 * g - 2; }

/// floor division for possibly negative numerators, positive divisor.
constexpr long floor_div(long a, long b) { return (a >= 0) ? a / b : -((-a + b - 1) / b); }

}  // namespace pairs
