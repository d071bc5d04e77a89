#include "pairs/chambers.hpp"

#include "pairs/errors.hpp"
#include "pairs/numerology.hpp"

namespace pairs {

ChamberSpec ChamberSpec::make(long g, long d) {
    if (g < 2) throw OutOfRange("chamber data needs g >= 2");
    if (d < 3) throw OutOfRange("chamber data needs d >= 3");
    return {g, d};
}

std::string_view to_string(AmplenessVerdict v) {
    switch (v) {
        case AmplenessVerdict::ample: return "ample";
        case AmplenessVerdict::not_ample: return "not_ample";
        case AmplenessVerdict::undetermined: return "undetermined";
    }
    return "?";
}

long chamber_index(const Rational& sigma, const ChamberSpec& spec) {
    const Rational half_d(Integer(spec.d), Integer(2));
    if (sigma.sign() <= 0 || sigma >= half_d) throw OutOfRange("sigma must lie in (0, d/2)");
    const Rational gap = half_d - sigma;
    if (gap.is_integer()) throw OnWall("sigma = " + sigma.str() + " is a wall");
    Integer floor_gap;
    mpz_fdiv_q(floor_gap.get_mpz_t(), gap.numerator().get_mpz_t(), gap.denominator().get_mpz_t());
    return floor_gap.get_si();
}

std::vector<Rational> walls(const ChamberSpec& spec) {
    std::vector<Rational> out;
    for (long i = 1; i <= spec.w(); ++i) out.emplace_back(Integer(spec.d - 2 * i), Integer(2));
    return out;
}

AmplenessVerdict is_ample(const LineBundleLabel& label, const ChamberSpec& spec) {
    const long w = spec.w();
    const long i = label.i;
    const long m = label.m;
    const long n = label.n;
    if (i < 0 || i > w) throw InvalidChamber("chamber index outside 0..w");
    if (i == 0) throw UnsupportedChamber("M_0 is projective space; its cone is not described by this rule");
    if (i < w) return ((i - 1) * m < n && n < i * m) ? AmplenessVerdict::ample : AmplenessVerdict::not_ample;

    const bool inside = (w - 1) * m < n && 2 * n < m * (spec.d - 2);
    if (spec.d > 2 * spec.g - 2) return inside ? AmplenessVerdict::ample : AmplenessVerdict::not_ample;
    if (inside) return AmplenessVerdict::ample;
    if (n <= (w - 1) * m) return AmplenessVerdict::not_ample;
    return AmplenessVerdict::undetermined;
}

LineBundleLabel canonical_label(long i, const ChamberSpec& spec) {
    if (i < 0 || i > spec.w()) throw InvalidChamber("chamber index outside 0..w");
    return {-3, 4 - spec.d - spec.g, i};
}

std::pair<long, long> anticanonical_twist(long m, long n, const ChamberSpec& spec) {
    const LineBundleLabel k = canonical_label(0, spec);
    return {m - k.m, n - k.n};
}

long blowup_level_b(long m, long n, const ChamberSpec& spec) {
    if (m < 0 || n < 0) throw OutOfRange("blow-up level needs m, n >= 0");
    if (!region_holds(spec.g, spec.d, m, n)) throw RegionViolation("m(d-2) - 2n > -d + 2g - 2 fails");
    const auto [a, b] = anticanonical_twist(m, n, spec);
    return floor_div(b, a) + 1;
}

std::array<long, 3> restriction_degrees(long m, long n, long i, const ChamberSpec& spec) {
    const long q = q_index(i, m, n);
    return {q, -q, h_exponent(spec.d, m, n)};
}

std::pair<Rational, Rational> theta_pullback(const ChamberSpec& spec) {
    return {Rational(1), Rational(Integer(spec.d - 2), Integer(2))};
}

std::pair<long, long> iota_pullback(long m, long n, long deg_d) {
    if (deg_d < 0) throw OutOfRange("divisor degree must be nonnegative");
    return {m, n - m * deg_d};
}

Dictionary dictionary(long m, long n, const ChamberSpec& spec) { return {-m, (spec.d - spec.g) * m - n}; }

std::pair<long, long> recompose(const Dictionary& dict, const ChamberSpec& spec) {
    // det pi_! E = O(-1, g - d), Lambda^2 E_x = O(0, -1).
    return {-dict.det_exponent, dict.det_exponent * (spec.g - spec.d) - dict.lambda_exponent};
}

std::vector<ConeRow> chamber_diagram(const ChamberSpec& spec) {
    std::vector<ConeRow> rows;
    const long w = spec.w();
    for (long i = 1; i < w; ++i) rows.push_back({i, Rational(i - 1), Rational(i), true});
    rows.push_back({w, Rational(w - 1), Rational(Integer(spec.d - 2), Integer(2)), spec.d > 2 * spec.g - 2});
    return rows;
}

}  // namespace pairs
