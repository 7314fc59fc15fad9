#pragma once

#include <vector>

namespace wavedecay {

// Tolerances shared by the measure layer: coordinates closer than
// kCoordTol are merged, masses below kMassTol are dropped.
inline constexpr double kCoordTol = 1e-12;
inline constexpr double kMassTol = 1e-15;

// A point mass. `mass` is signed.
struct Atom {
    double pos = 0.0;
    double mass = 0.0;
};

// A constant density `value` on the half-open interval [lo, hi).
struct DensityPiece {
    double lo = 0.0;
    double hi = 0.0;
    double value = 0.0;

    double length() const { return hi - lo; }
    double mass() const { return value * (hi - lo); }
};

// One interval of a restriction set; endpoints may be +-infinity
// (an infinite endpoint is treated as open).
struct Interval {
    double lo;
    double hi;
    bool closed_lo = true;
    bool closed_hi = false;
};

// A finite union of disjoint intervals, used only for restriction queries.
struct IntervalSet {
    std::vector<Interval> parts;

    IntervalSet() = default;
    IntervalSet(std::initializer_list<Interval> list) : parts(list) {}
    static IntervalSet whole_line();
    bool contains_point(double x) const;
};

// A finite signed measure on the real line: finitely many atoms plus a
// piecewise-constant density. Atom positions are strictly increasing,
// density intervals are disjoint, sorted and bounded. Values are
// canonicalized on construction; instances are immutable afterwards.
class LineMeasure {
public:
    LineMeasure() = default;
    LineMeasure(std::vector<Atom> atoms, std::vector<DensityPiece> density);

    static LineMeasure zero() { return LineMeasure(); }
    static LineMeasure point_mass(double pos, double mass);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<DensityPiece>& density() const { return density_; }

    bool is_zero() const { return atoms_.empty() && density_.empty(); }
    // True when every atom and density piece is nonnegative.
    bool is_positive() const;

    double total_mass() const;
    double total_variation() const;
    double atomic_mass() const;   // sum of atom masses (signed)
    double density_mass() const;  // integral of the density (signed)

    LineMeasure positive_part() const;
    LineMeasure negative_part() const;
    LineMeasure total_variation_measure() const;

    LineMeasure restrict(const IntervalSet& set) const;
    LineMeasure restrict(const Interval& iv) const;

    // Exact supremum of m(A) over Borel sets A with Lebesgue measure <= s.
    // Requires a positive measure and s >= 0 (s may be +infinity).
    // Equals (total atomic mass) + (integral over [0,s] of the decreasing
    // rearrangement of the density).
    double sup_mass(double s) const;

    LineMeasure scaled(double factor) const;
    LineMeasure negated() const { return scaled(-1.0); }

    friend LineMeasure operator+(const LineMeasure& a, const LineMeasure& b);
    friend LineMeasure operator-(const LineMeasure& a, const LineMeasure& b);

private:
    void canonicalize();

    std::vector<Atom> atoms_;
    std::vector<DensityPiece> density_;
};

// Density levels aggregated by value, used by the rearrangement code.
// Returned sorted by value descending; equal-value pieces are combined
// (left-to-right concatenation, so the result is level-set determined).
struct DensityLevel {
    double value;
    double length;
};
std::vector<DensityLevel> descending_levels(
    const std::vector<DensityPiece>& density);

}  // namespace wavedecay
