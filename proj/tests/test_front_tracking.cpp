#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "wavedecay/errors.hpp"
#include "wavedecay/front_tracking.hpp"

using namespace wavedecay;
namespace wt = wavedecay::testing;

namespace {

PiecewiseConstantFn scalar_fn(double left, std::vector<std::pair<double, double>> jumps) {
    PiecewiseConstantFn fn;
    fn.left_value = {left, 0.0};
    for (auto [x, v] : jumps) fn.jumps.push_back({x, {v, 0.0}});
    return fn;
}

}  // namespace

TEST_CASE("init splits a scalar rarefaction into right-speed pieces") {
    const SystemPtr sys = builtin_burgers({0.5, 0.0}, 2.0);
    const FrontState st = init_approx(*sys, scalar_fn(0.0, {{0.0, 1.0}}), 0.25);
    REQUIRE(st.fronts.size() == 4);
    for (int k = 0; k < 4; ++k) {
        CHECK(st.fronts[k].strength == doctest::Approx(0.25));
        CHECK(st.fronts[k].speed == doctest::Approx(0.25 * (k + 1)));
        CHECK(st.fronts[k].pos == 0.0);
    }
    CHECK_THROWS_AS(init_approx(*sys, scalar_fn(0.0, {{0.0, 1.0}}), 0.0), Error);
}

TEST_CASE("a scalar shock keeps its exact speed between the characteristics") {
    const SystemPtr sys = builtin_burgers({0.5, 0.0}, 2.0);
    const FrontState st = init_approx(*sys, scalar_fn(1.0, {{0.0, 0.0}}), 0.25);
    REQUIRE(st.fronts.size() == 1);
    const Front& shock = st.fronts[0];
    CHECK(shock.strength == doctest::Approx(-1.0));
    CHECK(shock.speed == doctest::Approx(0.5));
    CHECK(shock.speed > 0.0);  // lambda(u+) = 0
    CHECK(shock.speed < 1.0);  // lambda(u-) = 1
}

TEST_CASE("a p-system jump orders its fronts by speed") {
    const SystemPtr sys = builtin_p_system(1.4, 1.0, {1.0, 0.0}, 0.3);
    PiecewiseConstantFn fn;
    fn.left_value = {1.05, -0.02};
    fn.jumps.push_back({0.0, {0.95, 0.0}});
    const FrontState st = init_approx(*sys, fn, 0.01);
    REQUIRE(st.fronts.size() >= 2);
    for (std::size_t k = 0; k + 1 < st.fronts.size(); ++k) {
        CHECK(st.fronts[k].family <= st.fronts[k + 1].family);
        CHECK(st.fronts[k].speed <= st.fronts[k + 1].speed + 1e-12);
    }
}

TEST_CASE("merging shocks collide at the predicted point") {
    const SystemPtr sys = builtin_burgers({0.5, 0.0}, 3.0);
    const auto u0 = scalar_fn(1.0, {{0.0, 0.5}, {1.0, 0.0}});
    const Trajectory traj = run_front_tracking(sys, u0, 1e-2, 4.0);

    REQUIRE(traj.events().size() == 1);
    const InteractionEvent& ev = traj.events()[0];
    CHECK(ev.t == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ev.x == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(ev.dq >= -1e-12);

    // Two shocks of 0.5 each approaching: Q = 2 * (0.5 * 0.5); afterwards a
    // single front remains and Q drops to zero.
    CHECK(traj.initial_q() == doctest::Approx(0.5));
    CHECK(ev.q_after == doctest::Approx(0.0));

    const PiecewiseConstantFn after = traj.solution_at(3.0);
    REQUIRE(after.jumps.size() == 1);
    CHECK(after.jumps[0].value[0] == doctest::Approx(0.0));
    CHECK(after.jumps[0].x == doctest::Approx(1.5 + 0.5 * 1.0));  // speed 1/2

    // Before the event both shocks are present.
    CHECK(traj.solution_at(1.0).jumps.size() == 2);
}

TEST_CASE("a lone fan never interacts and solution_at tracks characteristics") {
    const SystemPtr sys = builtin_burgers({0.5, 0.0}, 2.0);
    const double delta = 0.05;
    const Trajectory traj =
        run_front_tracking(sys, scalar_fn(0.0, {{0.0, 1.0}}), delta, 2.0);
    CHECK(traj.events().empty());
    CHECK(traj.initial_q() == 0.0);

    const FrontState st = traj.state_at(2.0);
    for (const Front& f : st.fronts) {
        CHECK(f.pos == doctest::Approx(f.speed * 2.0));
        CHECK(f.strength <= delta + 1e-15);
    }
    // t = 0 reproduces the discretized datum.
    const PiecewiseConstantFn at0 = traj.solution_at(0.0);
    REQUIRE(at0.jumps.size() == 1);
    CHECK(at0.jumps[0].value[0] == doctest::Approx(1.0));
}

TEST_CASE("cancellation: shock catches rarefaction and Q drops") {
    const SystemPtr sys = builtin_burgers({0.0, 0.0}, 3.0);
    // Shock (0.5 -> -0.1, speed 0.2) behind a rarefaction front
    // (-0.1 -> 0.1, speed 0.1): the shock absorbs it at t = 5.
    const auto u0 = scalar_fn(0.5, {{0.0, -0.1}, {0.5, 0.1}});
    const Trajectory traj = run_front_tracking(sys, u0, 0.4, 20.0);
    REQUIRE(!traj.events().empty());
    for (const InteractionEvent& ev : traj.events()) CHECK(ev.dq >= -1e-12);
    const double q_end = front_list_q(traj.final_state());
    CHECK(q_end <= traj.initial_q() + 1e-12);
}

TEST_CASE("upsilon is non-increasing across every event") {
    const SystemPtr sys = builtin_burgers({0.0, 0.0}, 3.0);
    const auto u0 =
        scalar_fn(0.2, {{0.0, 0.45}, {0.7, -0.1}, {1.4, 0.3}, {2.0, 0.05}});
    const double c0 = 10.0;
    const Trajectory traj = run_front_tracking(sys, u0, 5e-3, 30.0);
    REQUIRE(!traj.events().empty());

    double v_prev = traj.initial_v();
    double q_prev = traj.initial_q();
    for (const InteractionEvent& ev : traj.events()) {
        CHECK(ev.dq >= -1e-12);
        const double upsilon_prev = v_prev + c0 * q_prev;
        const double upsilon_now = ev.v_after + c0 * ev.q_after;
        CHECK(upsilon_now <= upsilon_prev + 1e-12);
        v_prev = ev.v_after;
        q_prev = ev.q_after;
    }
}

TEST_CASE("front-list Q agrees with the decomposition Q off events") {
    const SystemPtr sys = builtin_p_system(1.4, 1.0, {1.0, 0.0}, 0.3);
    PiecewiseConstantFn fn;
    fn.left_value = {1.0, 0.0};
    fn.jumps.push_back({-0.5, {0.95, 0.02}});
    fn.jumps.push_back({0.5, {1.02, -0.03}});
    const Trajectory traj = run_front_tracking(sys, fn, 5e-3, 0.2);
    const FrontState st = traj.state_at(0.1);
    const double from_list = front_list_q(st);
    const double from_meas = glimm_Q(decomposition_of(st, 2));
    CHECK(from_list == doctest::Approx(from_meas).epsilon(1e-12));

    // Incremental bookkeeping matches a full recomputation at the end.
    if (!traj.events().empty()) {
        const double q_inc = traj.events().back().q_after;
        const double q_full = front_list_q(traj.final_state());
        CHECK(q_inc == doctest::Approx(q_full).epsilon(1e-10));
    }
}

TEST_CASE("three fronts meeting at once resolve as a single Riemann problem") {
    const SystemPtr sys = builtin_burgers({0.6, 0.0}, 3.0);
    // Shocks 1.2->0.8->0.4->0 with speeds 1.0, 0.6, 0.2 all meet at
    // (t, x) = (2.5, 3).
    const auto u0 =
        scalar_fn(1.2, {{0.5, 0.8}, {1.5, 0.4}, {2.5, 0.0}});
    const Trajectory traj = run_front_tracking(sys, u0, 1e-2, 5.0);
    REQUIRE(traj.events().size() == 1);
    CHECK(traj.events()[0].t == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(traj.events()[0].x == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(traj.events()[0].dq >= 0.0);
    const PiecewiseConstantFn after = traj.solution_at(4.0);
    REQUIRE(after.jumps.size() == 1);
    CHECK(after.jumps[0].value[0] == doctest::Approx(0.0));
}

TEST_CASE("simultaneous separate collisions are processed left to right") {
    const SystemPtr sys = builtin_burgers({0.5, 0.0}, 4.0);
    // Two independent merging-shock pairs, both colliding at t = 2.
    const auto u0 = scalar_fn(
        1.0, {{0.0, 0.5}, {1.0, 0.0}, {10.0, 1.0}, {20.0, 0.5}, {21.0, 0.0}});
    const Trajectory traj = run_front_tracking(sys, u0, 1e-2, 3.0);
    std::vector<const InteractionEvent*> at2;
    for (const InteractionEvent& ev : traj.events())
        if (std::fabs(ev.t - 2.0) <= 1e-9) at2.push_back(&ev);
    REQUIRE(at2.size() == 2);
    CHECK(at2[0]->x == doctest::Approx(1.5));
    CHECK(at2[1]->x == doctest::Approx(21.5));
    CHECK(at2[0]->x < at2[1]->x);  // left first
}

TEST_CASE("front states stay chained: composing fronts hits the right state") {
    const SystemPtr sys = builtin_p_system(1.4, 1.0, {1.0, 0.0}, 0.3);
    const State ua = {1.0, 0.0};
    const State ub = sys->wave_curve(2, ua, 0.1);
    const State uc = sys->wave_curve(1, ub, 0.1);
    PiecewiseConstantFn fn;
    fn.left_value = ua;
    fn.jumps.push_back({-0.5, ub});
    fn.jumps.push_back({0.5, uc});
    const Trajectory traj = run_front_tracking(sys, fn, 2e-3, 1.0);
    REQUIRE(traj.events().size() > 1000);

    for (double t : {0.0, 0.3, 0.7, 1.0}) {
        const FrontState st = traj.state_at(t);
        double worst = 0.0;
        State u = st.left_state;
        for (const Front& f : st.fronts) {
            worst = std::max(worst, state_norm(state_sub(u, f.u_left)));
            u = f.u_right;
        }
        worst = std::max(worst, state_norm(state_sub(u, uc)));
        CHECK(worst <= 1e-10);
        // Rarefaction pieces never exceed the splitting width.
        for (const Front& f : st.fronts)
            if (f.is_rarefaction()) CHECK(f.strength <= st.delta * (1 + 1e-12));
    }
}

TEST_CASE("p-system crossing waves interact with dq near the product") {
    const SystemPtr sys = builtin_p_system(1.4, 1.0, {1.0, 0.0}, 0.3);
    // A 2-wave left of a 1-wave; both rarefactions, built on the curves.
    const State ua = {1.0, 0.0};
    const State ub = sys->wave_curve(2, ua, 0.05);
    const State uc = sys->wave_curve(1, ub, 0.05);
    PiecewiseConstantFn fn;
    fn.left_value = ua;
    fn.jumps.push_back({-0.2, ub});
    fn.jumps.push_back({0.2, uc});

    const Trajectory traj = run_front_tracking(sys, fn, 0.05, 1.0);
    REQUIRE(!traj.events().empty());
    CHECK(traj.initial_q() == doctest::Approx(0.05 * 0.05).epsilon(1e-6));
    double total_drop = 0.0;
    for (const InteractionEvent& ev : traj.events()) {
        CHECK(ev.dq >= -1e-12);
        total_drop += ev.dq;
    }
    // All crossing potential is released once the waves pass each other.
    CHECK(std::fabs(total_drop - traj.initial_q()) <= 1e-8);
    const double q_end = front_list_q(traj.final_state());
    CHECK(q_end <= 1e-8);
}

TEST_CASE("weak form residual vanishes for pure shocks and is O(delta) with fans") {
    const SystemPtr sys = builtin_burgers({0.5, 0.0}, 3.0);

    // Exact Rankine-Hugoniot shocks solve the weak form exactly.
    const auto shocks = scalar_fn(1.0, {{0.0, 0.5}, {1.0, 0.0}});
    const Trajectory tshocks = run_front_tracking(sys, shocks, 1e-2, 4.0);
    CHECK(wt::weak_form_residual_battery(tshocks, -1.0, 4.0) <= 1e-12);

    // With rarefactions the defect halves when delta halves.
    const auto mixed = scalar_fn(0.0, {{0.0, 0.5}, {1.0, 0.2}});
    const double r1 =
        wt::weak_form_residual_battery(run_front_tracking(sys, mixed, 0.04, 4.0),
                                       -1.0, 4.0);
    const double r2 =
        wt::weak_form_residual_battery(run_front_tracking(sys, mixed, 0.02, 4.0),
                                       -1.0, 4.0);
    CHECK(r1 > 1e-9);
    const double ratio = r2 / r1;
    CHECK(ratio >= 0.3);
    CHECK(ratio <= 0.7);
}

TEST_CASE("budget caps raise BudgetExceeded with the event time") {
    const SystemPtr sys = builtin_burgers({0.0, 0.0}, 3.0);
    const auto u0 = scalar_fn(0.2, {{0.0, 0.45}, {0.7, -0.1}, {1.4, 0.3}});
    EvolveOptions opts;
    opts.limits.max_events = 1;
    bool threw = false;
    try {
        run_front_tracking(sys, u0, 5e-3, 30.0, opts);
    } catch (const BudgetExceeded& e) {
        threw = true;
        CHECK(e.time > 0.0);
    }
    CHECK(threw);
}

TEST_CASE("scalar exactness: the fan converges to the rarefaction in L1") {
    const SystemPtr sys = builtin_burgers({0.5, 0.0}, 2.0);
    const double t = 1.5;
    auto l1_error = [&](double delta) {
        const Trajectory traj =
            run_front_tracking(sys, scalar_fn(0.0, {{0.0, 1.0}}), delta, t);
        const PiecewiseConstantFn u = traj.solution_at(t);
        // Exact solution: u = clamp(x/t, 0, 1); integrate |diff| on a grid.
        double err = 0.0;
        const int cells = 4000;
        const double lo = -0.5, hi = 2.0;
        for (int i = 0; i < cells; ++i) {
            const double x = lo + (hi - lo) * (i + 0.5) / cells;
            const double exact = std::clamp(x / t, 0.0, 1.0);
            err += std::fabs(u.value_at(x)[0] - exact) * (hi - lo) / cells;
        }
        return err;
    };
    const double e1 = l1_error(0.05);
    const double e2 = l1_error(0.025);
    CHECK(e2 < e1);
    CHECK(e1 <= 0.05 * t);  // O(delta)
}

TEST_CASE("state_at replays deterministically between snapshots") {
    const SystemPtr sys = builtin_burgers({0.0, 0.0}, 3.0);
    const auto u0 =
        scalar_fn(0.2, {{0.0, 0.45}, {0.7, -0.1}, {1.4, 0.3}, {2.0, 0.05}});
    EvolveOptions opts;
    opts.snapshot_every_events = 2;  // force replay work
    const Trajectory traj = run_front_tracking(sys, u0, 5e-3, 30.0, opts);
    EvolveOptions opts2;
    opts2.snapshot_every_events = 1000000;
    const Trajectory traj2 = run_front_tracking(sys, u0, 5e-3, 30.0, opts2);

    for (double t : {0.5, 3.0, 7.5, 29.9}) {
        const FrontState a = traj.state_at(t);
        const FrontState b = traj2.state_at(t);
        REQUIRE(a.fronts.size() == b.fronts.size());
        for (std::size_t k = 0; k < a.fronts.size(); ++k) {
            CHECK(a.fronts[k].pos == doctest::Approx(b.fronts[k].pos).epsilon(1e-12));
            CHECK(a.fronts[k].strength ==
                  doctest::Approx(b.fronts[k].strength).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(traj.state_at(31.0), Error);
}
