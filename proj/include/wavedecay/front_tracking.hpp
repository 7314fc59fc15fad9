#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "wavedecay/piecewise_fn.hpp"
#include "wavedecay/system.hpp"
#include "wavedecay/wave_measures.hpp"

namespace wavedecay {

// A moving discontinuity. Positive strength = rarefaction front (travels at
// the characteristic speed of its right state, strength <= delta), negative
// strength = shock (exact Rankine-Hugoniot speed).
struct Front {
    double pos = 0.0;
    int family = 1;
    double strength = 0.0;
    double speed = 0.0;
    State u_left{};
    State u_right{};

    bool is_rarefaction() const { return strength > 0.0; }
};

// Piecewise-constant approximate solution at one instant. Fronts are kept
// in spatial order; distinct fronts may share a position momentarily (at
// t = 0 and at interaction instants), in which case list order is the
// left-to-right order. `delta` is the discretization parameter the state
// was built with; outgoing rarefactions wider than it get re-split.
struct FrontState {
    double time = 0.0;
    double delta = 0.0;
    State left_state{};
    std::vector<Front> fronts;

    PiecewiseConstantFn to_function() const;
    double total_strength() const;  // sum |sigma|, the V functional
};

struct InteractionEvent {
    double t = 0.0;
    double x = 0.0;
    double dq = 0.0;  // Q drop, >= -1e-12
    std::vector<int> families;
    double q_after = 0.0;
    double v_after = 0.0;
};

using EventLog = std::vector<InteractionEvent>;

struct EvolveLimits {
    double tv_cap = 0.0;  // 0 = auto: max(system budget, 1.5 * initial V)
    std::size_t max_fronts = 200000;
    std::size_t max_events = 2000000;
};

struct EvolveOptions {
    std::vector<double> snapshot_times;  // extra snapshots at these times
    std::size_t snapshot_every_events = 64;
    EvolveLimits limits;
    std::function<void(const FrontState&, const InteractionEvent&)> on_event;
};

// The result of an evolve run: enough snapshots to reconstruct the state at
// any time by replaying the (deterministic) event loop from the nearest
// earlier snapshot.
class Trajectory {
public:
    Trajectory(SystemPtr sys, FrontState initial, double t_end,
               EvolveLimits limits);

    const EventLog& events() const { return events_; }
    double t_end() const { return t_end_; }
    double initial_q() const { return q0_; }
    double initial_v() const { return v0_; }
    const SystemPtr& system() const { return sys_; }
    const FrontState& initial_state() const { return snapshots_.front(); }
    const FrontState& final_state() const { return snapshots_.back(); }

    FrontState state_at(double t) const;
    PiecewiseConstantFn solution_at(double t) const;

    // (t, Q) at t = 0 and after each event.
    std::vector<std::pair<double, double>> q_series() const;

private:
    friend Trajectory evolve(const FrontState&, SystemPtr, double,
                             const EvolveOptions&);

    SystemPtr sys_;
    double t_end_ = 0.0;
    EvolveLimits limits_;
    double q0_ = 0.0;
    double v0_ = 0.0;
    std::vector<FrontState> snapshots_;  // ascending time, first at t = 0
    EventLog events_;
};

// Discretizes u0: every jump is resolved by the Riemann solver; each
// rarefaction of strength sigma is split into ceil(sigma/delta) fronts of
// equal strength at the jump point.
FrontState init_approx(const HyperbolicSystem& sys, const PiecewiseConstantFn& u0,
                       double delta);

// Event-driven evolution up to time T: fronts travel on straight lines,
// the earliest collision is resolved by a Riemann problem across the outer
// states, outgoing rarefactions wider than delta are re-split, and the Q
// drop of every interaction is logged. delta is taken from the initial
// discretization (pass the value used in init_approx).
Trajectory evolve(const FrontState& initial, SystemPtr sys, double T,
                  const EvolveOptions& options = {});

// Convenience: init_approx + evolve.
Trajectory run_front_tracking(SystemPtr sys, const PiecewiseConstantFn& u0,
                              double delta, double T,
                              const EvolveOptions& options = {});

// Interaction potential of a front list. Agrees with glimm_Q of the
// extracted wave decomposition whenever all positions are distinct; at
// coincident positions the list order stands in for the spatial order,
// which is what the event loop needs at interaction instants.
double front_list_q(const FrontState& state);

WaveDecomposition decomposition_of(const FrontState& state, int n_families);

}  // namespace wavedecay
