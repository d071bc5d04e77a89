#pragma once

// Seeded generators for property tests. Every suite uses a fixed seed so a
// failure reproduces exactly.

#include <random>

#include "pairs/laurent_series.hpp"
#include "pairs/polynomial.hpp"
#include "pairs/rational.hpp"

namespace testgen {

inline std::mt19937& rng() {
    static std::mt19937 engine(0x5eed);
    return engine;
}

inline long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline pairs::Rational rational(long span = 9) {
    const long num = integer(-span, span);
    const long den = integer(1, span);
    return {pairs::Integer(num), pairs::Integer(den)};
}

inline pairs::Rational nonzero_rational(long span = 9) {
    for (;;) {
        pairs::Rational r = rational(span);
        if (!r.is_zero()) return r;
    }
}

inline pairs::Polynomial polynomial(int max_degree, long span = 6) {
    std::vector<pairs::Rational> c;
    const long deg = integer(0, max_degree);
    for (long k = 0; k <= deg; ++k) c.emplace_back(integer(-span, span));
    return pairs::Polynomial(std::move(c));
}

/// Power series with nonzero constant term, known below `order`.
inline pairs::LaurentSeries unit_series(long order) {
    std::vector<pairs::Rational> c;
    c.push_back(nonzero_rational(5));
    for (long k = 1; k < order; ++k) c.push_back(rational(5));
    return {0, std::move(c), order};
}

}  // namespace testgen
