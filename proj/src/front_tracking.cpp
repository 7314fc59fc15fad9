#include "wavedecay/front_tracking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wavedecay/errors.hpp"
#include "wavedecay/log.hpp"

namespace wavedecay {

namespace {

constexpr double kTieTol = 1e-12;       // coincident positions / times
constexpr double kStrengthTol = 1e-14;  // waves below this are dropped

// Q contribution of an ordered pair (a left of b). Cross-family pairs
// approach exactly when the faster family sits behind; same-family pairs
// enter once per negative member, so shock-shock counts twice and
// rarefaction-rarefaction not at all.
double pair_q(const Front& a, const Front& b) {
    if (a.family != b.family) {
        return a.family > b.family
                   ? std::fabs(a.strength) * std::fabs(b.strength)
                   : 0.0;
    }
    const double prod = std::fabs(a.strength) * std::fabs(b.strength);
    double q = 0.0;
    if (a.strength < 0.0) q += prod;
    if (b.strength < 0.0) q += prod;
    return q;
}

// Emits the fronts of a Riemann fan at position x, splitting rarefactions
// wider than delta into equal pieces along the wave curve.
void emit_waves(const HyperbolicSystem& sys, const RiemannFan& fan, double x,
                double delta, std::vector<Front>& out) {
    for (int i = 1; i <= sys.n(); ++i) {
        const double sigma = fan.strengths[i - 1];
        if (std::fabs(sigma) <= kStrengthTol) continue;
        const State& base = fan.states[i - 1];
        if (sigma < 0.0) {
            Front f;
            f.pos = x;
            f.family = i;
            f.strength = sigma;
            f.speed = fan.speeds[i - 1].lo;
            f.u_left = base;
            f.u_right = fan.states[i];
            out.push_back(f);
            continue;
        }
        const int pieces =
            sigma > delta ? static_cast<int>(std::ceil(sigma / delta)) : 1;
        State prev = base;
        for (int p = 1; p <= pieces; ++p) {
            const State next = p == pieces
                                   ? fan.states[i]
                                   : sys.wave_curve(i, base, sigma * p / pieces);
            Front f;
            f.pos = x;
            f.family = i;
            f.strength = sigma / pieces;
            f.speed = sys.eigen(next)[i - 1].lambda;  // right-state speed
            f.u_left = prev;
            f.u_right = next;
            out.push_back(f);
            prev = next;
        }
    }
}

struct EvolveContext {
    SystemPtr sys;
    EvolveLimits limits;
    double q_current = 0.0;
    std::size_t total_events = 0;
    std::size_t events_since_anchor = 0;
    EventLog* log = nullptr;
    const std::function<void(const FrontState&, const InteractionEvent&)>*
        callback = nullptr;
    std::vector<FrontState>* snapshots = nullptr;
    std::size_t snapshot_every = 64;
    std::size_t events_since_snapshot = 0;
};

// Q terms of all pairs touching the index range [lo, hi] of st.fronts.
double local_q(const FrontState& st, std::size_t lo, std::size_t hi) {
    double q = 0.0;
    for (std::size_t c = lo; c <= hi && c < st.fronts.size(); ++c) {
        for (std::size_t o = 0; o < lo; ++o) q += pair_q(st.fronts[o], st.fronts[c]);
        for (std::size_t o = hi + 1; o < st.fronts.size(); ++o)
            q += pair_q(st.fronts[c], st.fronts[o]);
        for (std::size_t o = c + 1; o <= hi && o < st.fronts.size(); ++o)
            q += pair_q(st.fronts[c], st.fronts[o]);
    }
    return q;
}

// Advances st in place up to time T, processing every collision with
// t <= T. Events are appended to ctx.log when present.
void advance_core(FrontState& st, double T, EvolveContext& ctx) {
    const HyperbolicSystem& sys = *ctx.sys;
    while (true) {
        // Earliest pairwise collision; near-ties resolved left to right.
        double t_hit = std::numeric_limits<double>::infinity();
        std::size_t hit_index = 0;
        for (std::size_t k = 0; k + 1 < st.fronts.size(); ++k) {
            const double rel = st.fronts[k].speed - st.fronts[k + 1].speed;
            if (rel <= kStrengthTol) continue;
            const double gap =
                std::max(st.fronts[k + 1].pos - st.fronts[k].pos, 0.0);
            const double t = st.time + gap / rel;
            if (t < t_hit - kTieTol) {
                t_hit = t;
                hit_index = k;
            }
        }

        if (t_hit > T) {
            const double dt = T - st.time;
            if (dt > 0.0)
                for (Front& f : st.fronts) f.pos += f.speed * dt;
            st.time = T;
            return;
        }

        const double dt = t_hit - st.time;
        if (dt > 0.0)
            for (Front& f : st.fronts) f.pos += f.speed * dt;
        st.time = t_hit;

        // Gather the maximal run of fronts meeting at the collision point;
        // a triple coincidence becomes one Riemann problem.
        const double x_hit = st.fronts[hit_index].pos;
        std::size_t lo = hit_index;
        std::size_t hi = hit_index + 1;
        while (lo > 0 && std::fabs(st.fronts[lo - 1].pos - x_hit) <= kTieTol) --lo;
        while (hi + 1 < st.fronts.size() &&
               std::fabs(st.fronts[hi + 1].pos - x_hit) <= kTieTol)
            ++hi;

        std::vector<int> families;
        for (std::size_t k = lo; k <= hi; ++k)
            families.push_back(st.fronts[k].family);
        std::sort(families.begin(), families.end());
        families.erase(std::unique(families.begin(), families.end()),
                       families.end());

        const State u_left = st.fronts[lo].u_left;
        const State u_right = st.fronts[hi].u_right;
        const RiemannFan fan = riemann_solve(sys, u_left, u_right);

        std::vector<Front> outgoing;
        emit_waves(sys, fan, x_hit, st.delta, outgoing);

        const double q_before_local = local_q(st, lo, hi);
        st.fronts.erase(st.fronts.begin() + lo, st.fronts.begin() + hi + 1);
        st.fronts.insert(st.fronts.begin() + lo, outgoing.begin(),
                         outgoing.end());
        const double q_after_local =
            outgoing.empty() ? 0.0 : local_q(st, lo, lo + outgoing.size() - 1);

        const double dq = q_before_local - q_after_local;
        ctx.q_current -= dq;
        ctx.total_events += 1;
        ctx.events_since_anchor += 1;
        if (ctx.events_since_anchor >= 1024) {  // kill float drift
            ctx.q_current = front_list_q(st);
            ctx.events_since_anchor = 0;
        }

        if (ctx.total_events > ctx.limits.max_events)
            throw BudgetExceeded("front tracking: event cap exceeded", st.time);
        if (st.fronts.size() > ctx.limits.max_fronts) {
            std::ostringstream os;
            os << "front tracking: front count " << st.fronts.size()
               << " exceeds cap " << ctx.limits.max_fronts << " at t=" << st.time;
            throw BudgetExceeded(os.str(), st.time);
        }
        const double v_now = st.total_strength();
        if (v_now > ctx.limits.tv_cap) {
            std::ostringstream os;
            os << "front tracking: total wave strength " << v_now
               << " exceeds cap " << ctx.limits.tv_cap << " at t=" << st.time;
            throw BudgetExceeded(os.str(), st.time);
        }

        if (ctx.log != nullptr) {
            InteractionEvent ev;
            ev.t = st.time;
            ev.x = x_hit;
            ev.dq = dq;
            ev.families = families;
            ev.q_after = ctx.q_current;
            ev.v_after = v_now;
            ctx.log->push_back(ev);
            if (ctx.callback != nullptr && *ctx.callback) (*ctx.callback)(st, ev);
        }
        if (ctx.snapshots != nullptr &&
            ++ctx.events_since_snapshot >= ctx.snapshot_every) {
            ctx.snapshots->push_back(st);
            ctx.events_since_snapshot = 0;
        }
    }
}

}  // namespace

PiecewiseConstantFn FrontState::to_function() const {
    PiecewiseConstantFn fn;
    fn.left_value = left_state;
    for (const Front& f : fronts) {
        if (!fn.jumps.empty() && f.pos - fn.jumps.back().x <= kTieTol)
            fn.jumps.back().value = f.u_right;
        else
            fn.jumps.push_back({f.pos, f.u_right});
    }
    return fn;
}

double FrontState::total_strength() const {
    double v = 0.0;
    for (const Front& f : fronts) v += std::fabs(f.strength);
    return v;
}

double front_list_q(const FrontState& state) {
    double q = 0.0;
    for (std::size_t a = 0; a < state.fronts.size(); ++a)
        for (std::size_t b = a + 1; b < state.fronts.size(); ++b)
            q += pair_q(state.fronts[a], state.fronts[b]);
    return q;
}

WaveDecomposition decomposition_of(const FrontState& state, int n_families) {
    WaveDecomposition d;
    d.n = n_families;
    std::array<std::vector<Atom>, 2> atoms;
    for (const Front& f : state.fronts)
        atoms[f.family - 1].push_back({f.pos, f.strength});
    for (int i = 0; i < n_families; ++i)
        d.per_family[i] = LineMeasure(std::move(atoms[i]), {});
    return d;
}

FrontState init_approx(const HyperbolicSystem& sys, const PiecewiseConstantFn& u0,
                       double delta) {
    if (!(delta > 0.0)) throw Error("init_approx: delta must be positive");
    u0.validate();
    sys.require_admissible(u0.left_value, "init_approx");

    FrontState st;
    st.time = 0.0;
    st.delta = delta;
    st.left_state = u0.left_value;
    State left = u0.left_value;
    for (const auto& jump : u0.jumps) {
        sys.require_admissible(jump.value, "init_approx");
        const RiemannFan fan = riemann_solve(sys, left, jump.value);
        emit_waves(sys, fan, jump.x, delta, st.fronts);
        left = jump.value;
    }
    return st;
}

Trajectory::Trajectory(SystemPtr sys, FrontState initial, double t_end,
                       EvolveLimits limits)
    : sys_(std::move(sys)), t_end_(t_end), limits_(limits) {
    snapshots_.push_back(std::move(initial));
    v0_ = snapshots_.front().total_strength();
    q0_ = front_list_q(snapshots_.front());
}

FrontState Trajectory::state_at(double t) const {
    if (t < -kTieTol || t > t_end_ + kTieTol)
        throw Error("state_at: time outside the computed range");
    t = std::clamp(t, 0.0, t_end_);
    auto it = std::upper_bound(
        snapshots_.begin(), snapshots_.end(), t + kTieTol,
        [](double value, const FrontState& s) { return value < s.time; });
    if (it == snapshots_.begin()) throw Error("state_at: no snapshot available");
    FrontState st = *(it - 1);
    if (t > st.time) {
        EvolveContext ctx;
        ctx.sys = sys_;
        ctx.limits = limits_;
        advance_core(st, t, ctx);
    }
    return st;
}

PiecewiseConstantFn Trajectory::solution_at(double t) const {
    return state_at(t).to_function();
}

std::vector<std::pair<double, double>> Trajectory::q_series() const {
    std::vector<std::pair<double, double>> series;
    series.emplace_back(0.0, q0_);
    for (const InteractionEvent& ev : events_) series.emplace_back(ev.t, ev.q_after);
    return series;
}

Trajectory evolve(const FrontState& initial, SystemPtr sys, double T,
                  const EvolveOptions& options) {
    if (!(T >= initial.time))
        throw Error("evolve: target time before the state time");

    EvolveLimits limits = options.limits;
    if (limits.tv_cap <= 0.0)
        limits.tv_cap =
            std::max(sys->tv_budget(), 1.5 * initial.total_strength()) + 1e-9;

    Trajectory traj(sys, initial, T, limits);

    EvolveContext ctx;
    ctx.sys = sys;
    ctx.limits = limits;
    ctx.q_current = traj.q0_;
    ctx.log = &traj.events_;
    ctx.callback = &options.on_event;
    ctx.snapshots = &traj.snapshots_;
    ctx.snapshot_every =
        options.snapshot_every_events > 0 ? options.snapshot_every_events : 64;

    std::vector<double> stops = options.snapshot_times;
    stops.push_back(T);
    std::sort(stops.begin(), stops.end());

    FrontState st = initial;
    for (double stop : stops) {
        if (stop < st.time - kTieTol || stop > T + kTieTol) continue;
        stop = std::min(stop, T);
        advance_core(st, stop, ctx);
        if (traj.snapshots_.back().time < st.time - kTieTol)
            traj.snapshots_.push_back(st);
    }
    if (traj.snapshots_.back().time < st.time - kTieTol)
        traj.snapshots_.push_back(st);
    log_info("evolve: t=%g with %zu fronts, %zu events, Q %g -> %g", T,
             st.fronts.size(), traj.events_.size(), traj.q0_, ctx.q_current);
    return traj;
}

Trajectory run_front_tracking(SystemPtr sys, const PiecewiseConstantFn& u0,
                              double delta, double T,
                              const EvolveOptions& options) {
    return evolve(init_approx(*sys, u0, delta), sys, T, options);
}

}  // namespace wavedecay
