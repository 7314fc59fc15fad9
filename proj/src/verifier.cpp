#include "wavedecay/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wavedecay/errors.hpp"
#include "wavedecay/log.hpp"
#include "wavedecay/wave_measures.hpp"

namespace wavedecay {

bool DecayReport::all_hold() const {
    for (const DecayCheck& c : per_time)
        if (!c.holds) return false;
    return true;
}

double DecayReport::min_margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (const DecayCheck& c : per_time) m = std::min(m, c.margin);
    return m;
}

LineMeasure positive_wave_density(const FrontState& state, int family) {
    std::vector<Atom> atoms;
    std::vector<DensityPiece> density;
    double prev_pos = 0.0;
    bool have_prev = false;
    for (const Front& f : state.fronts) {
        if (f.family != family) continue;
        if (f.strength > 0.0) {
            // A rarefaction front of strength sigma stands for mass spread
            // over its characteristic width sigma * t (lambda moves at unit
            // rate along the curve), never reaching past the previous front
            // of the same family. At t = 0 this degenerates to an atom,
            // which is exactly the initial wave measure.
            double width = f.strength * state.time;
            if (have_prev) width = std::min(width, f.pos - prev_pos);
            if (width > kCoordTol)
                density.push_back({f.pos - width, f.pos, f.strength / width});
            else
                atoms.push_back({f.pos, f.strength});
        }
        prev_pos = f.pos;
        have_prev = true;
    }
    return LineMeasure(std::move(atoms), std::move(density));
}

DecayReport verify_decay(SystemPtr sys, const PiecewiseConstantFn& u0,
                         const std::vector<int>& families,
                         std::vector<double> times, const VerifyParams& params) {
    u0.validate();
    for (int f : families)
        if (f < 1 || f > sys->n()) throw Error("verify_decay: bad family index");
    std::sort(times.begin(), times.end());
    if (!times.empty() && times.front() < 0.0)
        throw Error("verify_decay: times must be nonnegative");

    const double tv0 = u0.total_variation(sys->n());
    const double delta = params.delta > 0.0 ? params.delta : 1e-2 * tv0;
    const double tolerance = params.tolerance >= 0.0
                                 ? params.tolerance
                                 : 1e-8 + 2.0 * delta * tv0;
    const double t_end = times.empty() ? 0.0 : times.back();

    EvolveOptions opts;
    opts.snapshot_times = times;
    opts.limits = params.limits;
    Trajectory traj = run_front_tracking(sys, u0, delta, t_end, opts);

    DecayReport report;
    report.kappa_used = params.kappa;
    report.c0_used = params.c0;
    report.delta_used = delta;
    report.tolerance_used = tolerance;
    report.q_series = traj.q_series();
    report.functional_series.push_back(
        {0.0, traj.initial_v(), traj.initial_q(),
         traj.initial_v() + params.c0 * traj.initial_q()});
    for (const InteractionEvent& ev : traj.events())
        report.functional_series.push_back(
            {ev.t, ev.v_after, ev.q_after, ev.v_after + params.c0 * ev.q_after});

    const FrontState& initial = traj.initial_state();
    for (int family : families) {
        // Comparison datum: odd rearrangement of the (atomic) initial mu_i^+.
        const LineMeasure mu0_plus =
            decomposition_of(initial, sys->n()).family(family).positive_part();
        ImpulsiveFlow flow(profile_from_measure(mu0_plus), traj.events(),
                           params.kappa);
        for (double t : times) {
            const FrontState st = traj.state_at(t);
            const LineMeasure mu_plus = positive_wave_density(st, family);
            DecayCheck check;
            check.t = t;
            check.family = family;
            check.rearranged = odd_rearrangement(mu_plus);
            check.comparison = t > 0.0 ? flow.advance_to(t)
                                       : profile_from_measure(mu0_plus);
            const OrderResult res =
                profile_leq(check.rearranged, check.comparison);
            check.margin = res.margin;
            check.holds = res.margin >= -tolerance;
            log_debug("verify: t=%g family=%d margin=%g holds=%d", t, family,
                      check.margin, static_cast<int>(check.holds));
            report.per_time.push_back(check);
        }
    }
    std::sort(report.per_time.begin(), report.per_time.end(),
              [](const DecayCheck& a, const DecayCheck& b) {
                  if (a.t != b.t) return a.t < b.t;
                  return a.family < b.family;
              });
    return report;
}

std::vector<OleinikRow> oleinik_check(const Trajectory& traj,
                                      const std::vector<double>& times,
                                      double tolerance) {
    if (traj.system()->n() != 1)
        throw Error("oleinik_check: scalar systems only");

    std::vector<OleinikRow> rows;
    for (double t : times) {
        if (!(t > 0.0)) throw Error("oleinik_check: times must be positive");
        const FrontState st = traj.state_at(t);
        double max_density = 0.0;
        for (std::size_t k = 0; k + 1 < st.fronts.size(); ++k) {
            const Front& a = st.fronts[k];
            const Front& b = st.fronts[k + 1];
            if (!a.is_rarefaction() || !b.is_rarefaction()) continue;
            const double gap = b.pos - a.pos;
            // Coincident pieces are an unopened fan (a single jump); the
            // strength/gap proxy is defined over genuine gaps only.
            if (gap <= kCoordTol) continue;
            max_density = std::max(max_density, b.strength / gap);
        }
        OleinikRow row;
        row.t = t;
        row.max_density = max_density;
        row.bound = 1.0 / t;
        row.holds = max_density <= row.bound + tolerance;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace wavedecay
