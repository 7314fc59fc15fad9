#pragma once

#include <vector>

#include "wavedecay/burgers_flow.hpp"
#include "wavedecay/front_tracking.hpp"
#include "wavedecay/profile.hpp"

namespace wavedecay {

struct DecayCheck {
    double t = 0.0;
    int family = 1;
    double margin = 0.0;
    bool holds = false;
    OddConcaveProfile rearranged;  // odd rearrangement of mu_i^+ at time t
    OddConcaveProfile comparison;  // impulsive Burgers solution at time t
};

struct OleinikRow {
    double t = 0.0;
    double max_density = 0.0;
    double bound = 0.0;  // 1/t
    bool holds = false;
};

struct DecayReport {
    std::vector<DecayCheck> per_time;  // sorted by (t, family)
    double kappa_used = 0.0;
    double c0_used = 0.0;
    double delta_used = 0.0;
    double tolerance_used = 0.0;
    std::vector<std::pair<double, double>> q_series;  // (t, Q)
    // (t, V, Q, Upsilon) at t = 0 and after each event, with c0_used.
    std::vector<std::array<double, 4>> functional_series;

    bool all_hold() const;
    double min_margin() const;
};

struct VerifyParams {
    double kappa = 20.0;
    double c0 = 10.0;
    double delta = 0.0;      // 0 = auto: 1e-2 * initial TV
    double tolerance = -1.0; // < 0 = auto: 1e-8 + 2 * delta * initial TV
    EvolveLimits limits;
};

// Density reading of the positive i-waves of a front-tracking state: the
// mass of each rarefaction front is spread uniformly over its
// characteristic width sigma * t, capped by the gap back to the previous
// front of the same family; degenerate widths stay atomic (in particular
// the whole measure is atomic at t = 0). The approximation carries its
// positive waves as atoms of size <= delta; this is the O(delta)-accurate
// measure they sample, and the one the decay comparison is about.
LineMeasure positive_wave_density(const FrontState& state, int family);

// Runs front tracking for u0, builds the comparison solution from the odd
// rearrangement of mu_i^+ at t = 0 driven by the logged Q drops, and
// reports the ordering margin for every requested time and family.
// Margins are exact infima over x > 0 for the computed profiles.
DecayReport verify_decay(SystemPtr sys, const PiecewiseConstantFn& u0,
                         const std::vector<int>& families,
                         std::vector<double> times, const VerifyParams& params);

// Scalar sanity oracle: the maximal positive density of the approximation,
// measured as strength/gap over adjacent rarefaction front pairs, obeys the
// classical 1/t decay up to the stated tolerance.
std::vector<OleinikRow> oleinik_check(const Trajectory& traj,
                                      const std::vector<double>& times,
                                      double tolerance);

}  // namespace wavedecay
