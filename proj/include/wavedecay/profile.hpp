#pragma once

#include <vector>

#include "wavedecay/measure.hpp"

namespace wavedecay {

struct ProfilePoint {
    double x = 0.0;  // > 0
    double v = 0.0;
};

// An odd, nondecreasing function that is piecewise linear and concave for
// x > 0, with a possible jump at the origin. Only the x > 0 branch is
// stored; the function is implicitly odd-extended. The last breakpoint
// value equals the plateau (the constant value beyond it); with no
// breakpoints the function is constant = origin_value on x > 0.
//
// This is the invariant set of the comparison flow: nondecreasing odd
// profiles, concave on the positive half line.
class OddConcaveProfile {
public:
    OddConcaveProfile() = default;  // identically zero
    OddConcaveProfile(double origin_value, std::vector<ProfilePoint> breakpoints,
                      double plateau);

    static OddConcaveProfile zero() { return OddConcaveProfile(); }
    // sgn(x) * height, i.e. a pure origin jump.
    static OddConcaveProfile step(double height);
    // min(slope * x, plateau) for x > 0.
    static OddConcaveProfile ramp(double slope, double plateau);

    double origin_value() const { return origin_; }
    const std::vector<ProfilePoint>& breakpoints() const { return points_; }
    double plateau() const { return plateau_; }
    bool is_zero() const;

    // Value at x > 0 (use odd symmetry for x < 0); value_at(0+) = origin.
    double value(double x) const;

    // Distributional derivative on the whole line: an atom at the origin of
    // mass 2 * origin_value plus the even density given by the slopes.
    LineMeasure derivative_measure() const;

    OddConcaveProfile shifted(double c) const;   // adds c >= 0 everywhere on x>0
    OddConcaveProfile scaled(double factor) const;  // factor >= 0, scales values

private:
    double origin_ = 0.0;
    std::vector<ProfilePoint> points_;
    double plateau_ = 0.0;
};

struct OrderResult {
    bool holds = false;
    double margin = 0.0;  // inf over x>0 of (right - left); negative on failure
};

// Symmetric (even, radially nonincreasing) rearrangement of a nonnegative
// piecewise-constant density: equimeasurable with the input at every
// positive level.
std::vector<DensityPiece> symmetric_rearrange(
    const std::vector<DensityPiece>& density);

// Odd rearrangement of a positive measure:
//   v(x) = sgn(x) * sup{ m(A) : meas(A) <= 2|x| } / 2,
// so the origin value is half the atomic mass and the plateau is half the
// total mass. (The supremum is the same whether the Lebesgue constraint is
// strict or not for this atoms-plus-density representation, so <= is used.)
OddConcaveProfile odd_rearrangement(const LineMeasure& m);

// Exact pointwise comparison a <= b on x > 0, evaluated at the union of
// breakpoints plus the origin limit and the plateaus.
OrderResult profile_leq(const OddConcaveProfile& a, const OddConcaveProfile& b);

// The partial order on positive measures, decided through the odd
// rearrangements. margin is in mass units.
OrderResult precedes(const LineMeasure& m, const LineMeasure& m2);

OddConcaveProfile shift_profile(const OddConcaveProfile& a, double c);

}  // namespace wavedecay
