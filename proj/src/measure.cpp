#include "wavedecay/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wavedecay/errors.hpp"

namespace wavedecay {

namespace {

bool piece_sane(const DensityPiece& p) {
    return std::isfinite(p.lo) && std::isfinite(p.hi) && std::isfinite(p.value);
}

}  // namespace

IntervalSet IntervalSet::whole_line() {
    const double inf = std::numeric_limits<double>::infinity();
    IntervalSet set;
    set.parts.push_back({-inf, inf, false, false});
    return set;
}

bool IntervalSet::contains_point(double x) const {
    for (const Interval& iv : parts) {
        const bool above = iv.closed_lo ? x >= iv.lo - kCoordTol : x > iv.lo + kCoordTol;
        const bool below = iv.closed_hi ? x <= iv.hi + kCoordTol : x < iv.hi - kCoordTol;
        if (above && below) return true;
    }
    return false;
}

LineMeasure::LineMeasure(std::vector<Atom> atoms, std::vector<DensityPiece> density)
    : atoms_(std::move(atoms)), density_(std::move(density)) {
    canonicalize();
}

LineMeasure LineMeasure::point_mass(double pos, double mass) {
    return LineMeasure({{pos, mass}}, {});
}

void LineMeasure::canonicalize() {
    for (const Atom& a : atoms_) {
        if (!std::isfinite(a.pos) || !std::isfinite(a.mass))
            throw Error("LineMeasure: non-finite atom");
    }
    for (const DensityPiece& p : density_) {
        if (!piece_sane(p)) throw Error("LineMeasure: non-finite density piece");
        if (p.hi < p.lo - kCoordTol)
            throw Error("LineMeasure: density interval with hi < lo");
    }

    std::stable_sort(atoms_.begin(), atoms_.end(),
                     [](const Atom& a, const Atom& b) { return a.pos < b.pos; });
    std::vector<Atom> merged;
    for (const Atom& a : atoms_) {
        if (!merged.empty() && a.pos - merged.back().pos <= kCoordTol) {
            merged.back().mass += a.mass;
        } else {
            merged.push_back(a);
        }
    }
    atoms_.clear();
    for (const Atom& a : merged)
        if (std::fabs(a.mass) >= kMassTol) atoms_.push_back(a);

    std::stable_sort(density_.begin(), density_.end(),
                     [](const DensityPiece& a, const DensityPiece& b) {
                         return a.lo < b.lo;
                     });
    std::vector<DensityPiece> pieces;
    for (const DensityPiece& p : density_) {
        if (p.length() <= kCoordTol || std::fabs(p.value) < kMassTol) continue;
        if (!pieces.empty() && p.lo < pieces.back().hi - kCoordTol)
            throw Error("LineMeasure: overlapping density intervals");
        if (!pieces.empty() && std::fabs(p.lo - pieces.back().hi) <= kCoordTol &&
            std::fabs(p.value - pieces.back().value) <= kMassTol) {
            pieces.back().hi = p.hi;  // touching pieces at equal level
        } else {
            pieces.push_back(p);
        }
    }
    density_ = std::move(pieces);
}

bool LineMeasure::is_positive() const {
    for (const Atom& a : atoms_)
        if (a.mass < 0.0) return false;
    for (const DensityPiece& p : density_)
        if (p.value < 0.0) return false;
    return true;
}

double LineMeasure::atomic_mass() const {
    double s = 0.0;
    for (const Atom& a : atoms_) s += a.mass;
    return s;
}

double LineMeasure::density_mass() const {
    double s = 0.0;
    for (const DensityPiece& p : density_) s += p.mass();
    return s;
}

double LineMeasure::total_mass() const { return atomic_mass() + density_mass(); }

double LineMeasure::total_variation() const {
    double s = 0.0;
    for (const Atom& a : atoms_) s += std::fabs(a.mass);
    for (const DensityPiece& p : density_) s += std::fabs(p.mass());
    return s;
}

LineMeasure LineMeasure::positive_part() const {
    std::vector<Atom> atoms;
    std::vector<DensityPiece> density;
    for (const Atom& a : atoms_)
        if (a.mass > 0.0) atoms.push_back(a);
    for (const DensityPiece& p : density_)
        if (p.value > 0.0) density.push_back(p);
    return LineMeasure(std::move(atoms), std::move(density));
}

LineMeasure LineMeasure::negative_part() const {
    std::vector<Atom> atoms;
    std::vector<DensityPiece> density;
    for (const Atom& a : atoms_)
        if (a.mass < 0.0) atoms.push_back({a.pos, -a.mass});
    for (const DensityPiece& p : density_)
        if (p.value < 0.0) density.push_back({p.lo, p.hi, -p.value});
    return LineMeasure(std::move(atoms), std::move(density));
}

LineMeasure LineMeasure::total_variation_measure() const {
    std::vector<Atom> atoms;
    std::vector<DensityPiece> density;
    for (const Atom& a : atoms_) atoms.push_back({a.pos, std::fabs(a.mass)});
    for (const DensityPiece& p : density_)
        density.push_back({p.lo, p.hi, std::fabs(p.value)});
    return LineMeasure(std::move(atoms), std::move(density));
}

LineMeasure LineMeasure::restrict(const Interval& iv) const {
    IntervalSet set;
    set.parts.push_back(iv);
    return restrict(set);
}

LineMeasure LineMeasure::restrict(const IntervalSet& set) const {
    std::vector<Atom> atoms;
    for (const Atom& a : atoms_)
        if (set.contains_point(a.pos)) atoms.push_back(a);

    // Density never charges single points, so open/closed flags are
    // immaterial here; intersect as half-open intervals.
    std::vector<DensityPiece> density;
    for (const DensityPiece& p : density_) {
        for (const Interval& iv : set.parts) {
            const double lo = std::max(p.lo, iv.lo);
            const double hi = std::min(p.hi, iv.hi);
            if (hi - lo > kCoordTol) density.push_back({lo, hi, p.value});
        }
    }
    return LineMeasure(std::move(atoms), std::move(density));
}

double LineMeasure::sup_mass(double s) const {
    if (!is_positive())
        throw std::invalid_argument("sup_mass: measure must be positive");
    if (std::isnan(s) || s < 0.0)
        throw std::invalid_argument("sup_mass: budget must be >= 0");

    double total = atomic_mass();  // atoms carry zero Lebesgue measure
    double budget = s;
    for (const DensityLevel& lv : descending_levels(density_)) {
        if (budget <= 0.0) break;
        const double take = std::min(lv.length, budget);
        total += lv.value * take;
        budget -= take;
    }
    return total;
}

LineMeasure LineMeasure::scaled(double factor) const {
    std::vector<Atom> atoms = atoms_;
    std::vector<DensityPiece> density = density_;
    for (Atom& a : atoms) a.mass *= factor;
    for (DensityPiece& p : density) p.value *= factor;
    return LineMeasure(std::move(atoms), std::move(density));
}

LineMeasure operator+(const LineMeasure& a, const LineMeasure& b) {
    std::vector<Atom> atoms = a.atoms_;
    atoms.insert(atoms.end(), b.atoms_.begin(), b.atoms_.end());

    // Common refinement of the two densities: sweep all endpoints and
    // sum the values active on each elementary interval.
    std::vector<double> cuts;
    for (const DensityPiece& p : a.density_) {
        cuts.push_back(p.lo);
        cuts.push_back(p.hi);
    }
    for (const DensityPiece& p : b.density_) {
        cuts.push_back(p.lo);
        cuts.push_back(p.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double x, double y) { return y - x <= kCoordTol; }),
               cuts.end());

    auto value_at = [](const std::vector<DensityPiece>& pieces, double x) {
        for (const DensityPiece& p : pieces)
            if (x >= p.lo && x < p.hi) return p.value;
        return 0.0;
    };

    std::vector<DensityPiece> density;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        const double v = value_at(a.density_, mid) + value_at(b.density_, mid);
        if (std::fabs(v) >= kMassTol)
            density.push_back({cuts[i], cuts[i + 1], v});
    }
    return LineMeasure(std::move(atoms), std::move(density));
}

LineMeasure operator-(const LineMeasure& a, const LineMeasure& b) {
    return a + b.negated();
}

std::vector<DensityLevel> descending_levels(
    const std::vector<DensityPiece>& density) {
    std::vector<DensityLevel> levels;
    levels.reserve(density.size());
    for (const DensityPiece& p : density)
        levels.push_back({p.value, p.length()});
    // Stable: ties keep left-to-right order of origin, then get combined.
    std::stable_sort(levels.begin(), levels.end(),
                     [](const DensityLevel& a, const DensityLevel& b) {
                         return a.value > b.value;
                     });
    std::vector<DensityLevel> combined;
    for (const DensityLevel& lv : levels) {
        if (!combined.empty() && std::fabs(lv.value - combined.back().value) <= kMassTol)
            combined.back().length += lv.length;
        else
            combined.push_back(lv);
    }
    return combined;
}

}  // namespace wavedecay
