#pragma once

#include "wavedecay/front_tracking.hpp"
#include "wavedecay/measure.hpp"
#include "wavedecay/profile.hpp"

namespace wavedecay {

// Initial datum of the comparison problem: the odd rearrangement of the
// positive wave measure, w(0,x) = sgn(x) * sup{ m(A) : meas(A) <= 2|x| }/2.
OddConcaveProfile profile_from_measure(const LineMeasure& m);

// Exact entropy solution of w_t + (w^2/2)_x = 0 after time dt for data in
// the invariant class (odd, nondecreasing, concave for x > 0): a linear
// piece of slope b becomes slope b/(1 + b dt) with breakpoints transported
// at speed w, and the origin jump opens a rarefaction fan of slope 1/dt.
// The plateau is conserved. Requires dt > 0.
OddConcaveProfile burgers_evolve(const OddConcaveProfile& w, double dt);

// Instantaneous source: w += kappa * dq * sgn(x). Requires dq >= 0 up to a
// 1e-12 slack (interaction logs may carry float noise).
OddConcaveProfile apply_impulse(const OddConcaveProfile& w, double dq,
                                double kappa);

// Alternates exact Burgers evolution with impulses kappa * dq at the logged
// event times up to t (inclusive). Q drops only at the finitely many logged
// events, so this is already the partition-limit solution of the impulsive
// problem; no mesh refinement is involved.
OddConcaveProfile solve_impulsive(const OddConcaveProfile& w0,
                                  const EventLog& events, double kappa,
                                  double t);

// Incremental form of solve_impulsive for monotone time queries: advancing
// to t1 <= t2 <= ... costs one pass over the event log in total.
class ImpulsiveFlow {
public:
    ImpulsiveFlow(OddConcaveProfile w0, const EventLog& events, double kappa);

    // t must not decrease between calls.
    const OddConcaveProfile& advance_to(double t);
    double time() const { return time_; }

private:
    OddConcaveProfile w_;
    EventLog events_;
    double kappa_;
    double time_ = 0.0;
    std::size_t next_event_ = 0;
};

}  // namespace wavedecay
