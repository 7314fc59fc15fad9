#include "wavedecay/burgers_flow.hpp"

#include <algorithm>
#include <cmath>

#include "wavedecay/errors.hpp"

namespace wavedecay {

OddConcaveProfile profile_from_measure(const LineMeasure& m) {
    return odd_rearrangement(m);
}

OddConcaveProfile burgers_evolve(const OddConcaveProfile& w, double dt) {
    if (!(dt > 0.0)) throw Error("burgers_evolve: dt must be positive");

    std::vector<ProfilePoint> pts;
    pts.reserve(w.breakpoints().size() + 1);
    // The origin jump opens a centered fan reaching (dt * w(0+), w(0+)).
    if (w.origin_value() > 0.0)
        pts.push_back({dt * w.origin_value(), w.origin_value()});
    // Breakpoints ride their characteristics; values are conserved.
    for (const ProfilePoint& p : w.breakpoints())
        pts.push_back({p.x + dt * p.v, p.v});
    return OddConcaveProfile(0.0, std::move(pts), w.plateau());
}

OddConcaveProfile apply_impulse(const OddConcaveProfile& w, double dq,
                                double kappa) {
    if (!(kappa > 0.0)) throw Error("apply_impulse: kappa must be positive");
    if (dq < -1e-12) throw Error("apply_impulse: negative Q drop");
    return w.shifted(kappa * std::max(dq, 0.0));
}

OddConcaveProfile solve_impulsive(const OddConcaveProfile& w0,
                                  const EventLog& events, double kappa,
                                  double t) {
    if (t < 0.0) throw Error("solve_impulsive: time must be nonnegative");
    ImpulsiveFlow flow(w0, events, kappa);
    return flow.advance_to(t);
}

ImpulsiveFlow::ImpulsiveFlow(OddConcaveProfile w0, const EventLog& events,
                             double kappa)
    : w_(std::move(w0)), events_(events), kappa_(kappa) {
    std::stable_sort(events_.begin(), events_.end(),
                     [](const InteractionEvent& a, const InteractionEvent& b) {
                         return a.t < b.t;
                     });
}

const OddConcaveProfile& ImpulsiveFlow::advance_to(double t) {
    if (t < time_ - 1e-12)
        throw Error("ImpulsiveFlow: queries must not go backwards");
    while (next_event_ < events_.size() && events_[next_event_].t <= t) {
        const InteractionEvent& ev = events_[next_event_];
        if (ev.t > time_) {
            w_ = burgers_evolve(w_, ev.t - time_);
            time_ = ev.t;
        }
        w_ = apply_impulse(w_, ev.dq, kappa_);
        ++next_event_;
    }
    if (t > time_) {
        w_ = burgers_evolve(w_, t - time_);
        time_ = t;
    }
    return w_;
}

}  // namespace wavedecay
