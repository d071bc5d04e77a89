#pragma once

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "pairs/rational.hpp"

namespace pairs {

/// Genus and degree of the moduli problem; w = floor((d - 1) / 2).
struct ChamberSpec {
    long g;
    long d;

    /// Validates g >= 2 and d >= 3; throws OutOfRange otherwise.
    static ChamberSpec make(long g, long d);
    [[nodiscard]] long w() const { return (d - 1) / 2; }
};

/// O_i(m, n) on the chamber-i moduli space.
struct LineBundleLabel {
    long m;
    long n;
    long i;
    friend bool operator==(const LineBundleLabel&, const LineBundleLabel&) = default;
};

enum class AmplenessVerdict { ample, not_ample, undetermined };
std::string_view to_string(AmplenessVerdict v);

/// The i with max(0, d/2 - i - 1) < sigma < d/2 - i.
/// Throws OutOfRange for sigma outside (0, d/2) and OnWall on a wall.
long chamber_index(const Rational& sigma, const ChamberSpec& spec);

/// d/2 - i for i = 1..w, decreasing.
std::vector<Rational> walls(const ChamberSpec& spec);

/// Open-cone ampleness; boundary rays are not ample. Throws UnsupportedChamber
/// for i = 0 and InvalidChamber for i outside 0..w.
AmplenessVerdict is_ample(const LineBundleLabel& label, const ChamberSpec& spec);

/// K = O_i(-3, 4 - d - g).
LineBundleLabel canonical_label(long i, const ChamberSpec& spec);

/// K^-1 O(m, n) = O(m + 3, n + d + g - 4).
std::pair<long, long> anticanonical_twist(long m, long n, const ChamberSpec& spec);

/// b = floor((n + d + g - 4) / (m + 3)) + 1. Throws OutOfRange for negative
/// m or n and RegionViolation when m(d-2) - 2n > -d + 2g - 2 fails.
long blowup_level_b(long m, long n, const ChamberSpec& spec);

/// Fibre degrees of O_i(m,n) on P W^+_i, on P W^-_i, and on the Abel-Jacobi fibres.
std::array<long, 3> restriction_degrees(long m, long n, long i, const ChamberSpec& spec);

/// f^* O(Theta) = O_w(1, d/2 - 1).
std::pair<Rational, Rational> theta_pullback(const ChamberSpec& spec);

/// iota_D^* O_i(m, n) = O_i(m, n - m deg D). Throws OutOfRange for deg D < 0.
std::pair<long, long> iota_pullback(long m, long n, long deg_d);

/// O(m, n) = (det pi_! E)^det_exponent (x) (Lambda^2 E_x)^lambda_exponent.
struct Dictionary {
    long det_exponent;
    long lambda_exponent;
    friend bool operator==(const Dictionary&, const Dictionary&) = default;
};
Dictionary dictionary(long m, long n, const ChamberSpec& spec);
/// Inverse of dictionary().
std::pair<long, long> recompose(const Dictionary& dict, const ChamberSpec& spec);

/// One row of the ample-cone diagram: the cone of M_i in slopes n/m.
struct ConeRow {
    long i;
    Rational lower_slope;
    Rational upper_slope;
    /// False when only the guaranteed sub-cone is known (i = w, d <= 2g - 2).
    bool upper_exact;
};
std::vector<ConeRow> chamber_diagram(const ChamberSpec& spec);

}  // namespace pairs
