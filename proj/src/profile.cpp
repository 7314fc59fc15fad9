#include "wavedecay/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wavedecay/errors.hpp"

namespace wavedecay {

namespace {

constexpr double kProfileTol = 1e-9;

// Drops zero-width / collinear / trailing-flat breakpoints in place.
// A breakpoint is removed when the graph moves by at most 1e-13, which
// covers exact collinearity and the micro-kinks left near the origin by
// long impulse schedules.
void normalize_points(double origin, std::vector<ProfilePoint>& pts,
                      double plateau) {
    std::vector<ProfilePoint> out;
    for (const ProfilePoint& p : pts) {
        if (!out.empty() && p.x - out.back().x <= kCoordTol) {
            out.back() = p;
            continue;
        }
        out.push_back(p);
    }
    std::vector<ProfilePoint> merged;
    for (const ProfilePoint& p : out) {
        while (!merged.empty()) {
            const double x0 = merged.size() >= 2 ? merged[merged.size() - 2].x : 0.0;
            const double v0 = merged.size() >= 2 ? merged[merged.size() - 2].v : origin;
            const ProfilePoint& q = merged.back();
            const double chord = v0 + (p.v - v0) * (q.x - x0) / (p.x - x0);
            if (std::fabs(q.v - chord) <= 1e-13) {
                merged.pop_back();
                continue;
            }
            break;
        }
        merged.push_back(p);
    }
    // Trailing points at plateau level contribute nothing past the first.
    while (merged.size() >= 2 &&
           std::fabs(merged[merged.size() - 2].v - plateau) <= kMassTol &&
           std::fabs(merged.back().v - plateau) <= kMassTol) {
        merged.pop_back();
    }
    if (merged.size() == 1 && std::fabs(merged[0].v - origin) <= kMassTol &&
        std::fabs(plateau - origin) <= kMassTol) {
        merged.clear();
    }
    pts = std::move(merged);
}

}  // namespace

OddConcaveProfile::OddConcaveProfile(double origin_value,
                                     std::vector<ProfilePoint> breakpoints,
                                     double plateau)
    : origin_(origin_value), points_(std::move(breakpoints)), plateau_(plateau) {
    if (!std::isfinite(origin_) || !std::isfinite(plateau_))
        throw Error("OddConcaveProfile: non-finite data");
    if (origin_ < -kProfileTol)
        throw Error("OddConcaveProfile: negative origin value");
    origin_ = std::max(origin_, 0.0);

    normalize_points(origin_, points_, plateau_);

    double prev_x = 0.0;
    double prev_v = origin_;
    double prev_slope = std::numeric_limits<double>::infinity();
    for (const ProfilePoint& p : points_) {
        if (!(p.x > prev_x))
            throw Error("OddConcaveProfile: breakpoints must increase");
        if (p.v < prev_v - kProfileTol)
            throw Error("OddConcaveProfile: values must be nondecreasing");
        const double slope = (p.v - prev_v) / (p.x - prev_x);
        if (slope > prev_slope + kProfileTol * std::max(1.0, std::fabs(prev_slope)))
            throw Error("OddConcaveProfile: slopes must be nonincreasing");
        prev_slope = slope;
        prev_x = p.x;
        prev_v = p.v;
    }
    if (plateau_ < prev_v - kProfileTol)
        throw Error("OddConcaveProfile: plateau below last breakpoint");
    if (!points_.empty() && std::fabs(points_.back().v - plateau_) > kProfileTol)
        throw Error("OddConcaveProfile: last breakpoint must reach the plateau");
    if (points_.empty() && std::fabs(plateau_ - origin_) > kProfileTol)
        throw Error("OddConcaveProfile: constant profile needs plateau == origin");
}

OddConcaveProfile OddConcaveProfile::step(double height) {
    return OddConcaveProfile(height, {}, height);
}

OddConcaveProfile OddConcaveProfile::ramp(double slope, double plateau) {
    if (plateau == 0.0) return zero();
    if (slope <= 0.0) throw Error("ramp: slope must be positive");
    return OddConcaveProfile(0.0, {{plateau / slope, plateau}}, plateau);
}

bool OddConcaveProfile::is_zero() const {
    return origin_ == 0.0 && points_.empty() && plateau_ == 0.0;
}

double OddConcaveProfile::value(double x) const {
    if (x <= 0.0) return origin_;
    double prev_x = 0.0;
    double prev_v = origin_;
    for (const ProfilePoint& p : points_) {
        if (x == p.x) return p.v;  // keep breakpoint evaluations exact
        if (x < p.x)
            return prev_v + (p.v - prev_v) * (x - prev_x) / (p.x - prev_x);
        prev_x = p.x;
        prev_v = p.v;
    }
    return plateau_;
}

LineMeasure OddConcaveProfile::derivative_measure() const {
    std::vector<Atom> atoms;
    if (origin_ > 0.0) atoms.push_back({0.0, 2.0 * origin_});
    std::vector<DensityPiece> density;
    double prev_x = 0.0;
    double prev_v = origin_;
    for (const ProfilePoint& p : points_) {
        const double slope = (p.v - prev_v) / (p.x - prev_x);
        if (slope > 0.0) {
            density.push_back({-p.x, -prev_x, slope});
            density.push_back({prev_x, p.x, slope});
        }
        prev_x = p.x;
        prev_v = p.v;
    }
    return LineMeasure(std::move(atoms), std::move(density));
}

OddConcaveProfile OddConcaveProfile::shifted(double c) const {
    if (c < 0.0) throw Error("shift_profile: shift must be nonnegative");
    std::vector<ProfilePoint> pts = points_;
    for (ProfilePoint& p : pts) p.v += c;
    return OddConcaveProfile(origin_ + c, std::move(pts), plateau_ + c);
}

OddConcaveProfile OddConcaveProfile::scaled(double factor) const {
    if (factor < 0.0) throw Error("profile scale must be nonnegative");
    std::vector<ProfilePoint> pts = points_;
    for (ProfilePoint& p : pts) p.v *= factor;
    return OddConcaveProfile(origin_ * factor, std::move(pts), plateau_ * factor);
}

std::vector<DensityPiece> symmetric_rearrange(
    const std::vector<DensityPiece>& density) {
    for (const DensityPiece& p : density)
        if (p.value < 0.0)
            throw std::invalid_argument("symmetric_rearrange: negative density");

    // Stack the level sets outward from the origin, largest value first.
    std::vector<DensityLevel> levels = descending_levels(density);
    std::vector<DensityPiece> out;
    double reach = 0.0;  // current half-width
    for (const DensityLevel& lv : levels) {
        if (lv.value <= 0.0) break;
        const double next = reach + lv.length / 2.0;
        out.push_back({-next, -reach, lv.value});
        out.push_back({reach, next, lv.value});
        reach = next;
    }
    std::sort(out.begin(), out.end(),
              [](const DensityPiece& a, const DensityPiece& b) { return a.lo < b.lo; });
    // Touching symmetric halves of the top level form one interval.
    std::vector<DensityPiece> compact;
    for (const DensityPiece& p : out) {
        if (!compact.empty() && std::fabs(compact.back().hi - p.lo) <= kCoordTol &&
            std::fabs(compact.back().value - p.value) <= kMassTol)
            compact.back().hi = p.hi;
        else
            compact.push_back(p);
    }
    return compact;
}

OddConcaveProfile odd_rearrangement(const LineMeasure& m) {
    if (!m.is_positive())
        throw std::invalid_argument("odd_rearrangement: measure must be positive");

    const double origin = m.atomic_mass() / 2.0;
    std::vector<ProfilePoint> pts;
    double x = 0.0;
    double v = origin;
    for (const DensityLevel& lv : descending_levels(m.density())) {
        if (lv.value <= 0.0) break;
        x += lv.length / 2.0;
        v += lv.value * (lv.length / 2.0);
        pts.push_back({x, v});
    }
    return OddConcaveProfile(origin, std::move(pts), v);
}

OrderResult profile_leq(const OddConcaveProfile& a, const OddConcaveProfile& b) {
    // Both functions are piecewise linear on the union of breakpoints and
    // constant beyond the last one, so the infimum of (b - a) over x > 0 is
    // attained at a breakpoint, at the origin limit, or at the plateaus.
    double margin = b.origin_value() - a.origin_value();
    auto consider = [&](double x) {
        margin = std::min(margin, b.value(x) - a.value(x));
    };
    for (const ProfilePoint& p : a.breakpoints()) consider(p.x);
    for (const ProfilePoint& p : b.breakpoints()) consider(p.x);
    margin = std::min(margin, b.plateau() - a.plateau());
    return {margin >= -kCoordTol, margin};
}

OrderResult precedes(const LineMeasure& m, const LineMeasure& m2) {
    return profile_leq(odd_rearrangement(m), odd_rearrangement(m2));
}

OddConcaveProfile shift_profile(const OddConcaveProfile& a, double c) {
    return a.shifted(c);
}

}  // namespace wavedecay
