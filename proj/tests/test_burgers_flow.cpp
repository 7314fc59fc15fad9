#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "wavedecay/burgers_flow.hpp"
#include "wavedecay/errors.hpp"

using namespace wavedecay;
namespace wt = wavedecay::testing;

TEST_CASE("a step opens the centered fan clamp(x/t)") {
    const auto w0 = OddConcaveProfile::step(0.5);
    const auto w = burgers_evolve(w0, 2.0);
    CHECK(w.origin_value() == 0.0);
    REQUIRE(w.breakpoints().size() == 1);
    CHECK(w.breakpoints()[0].x == doctest::Approx(1.0));  // t * sigma/2
    CHECK(w.breakpoints()[0].v == doctest::Approx(0.5));
    CHECK(w.value(0.5) == doctest::Approx(0.25));  // x/t inside the fan
    CHECK(w.plateau() == doctest::Approx(0.5));
    CHECK_THROWS_AS(burgers_evolve(w0, 0.0), Error);
}

TEST_CASE("a ramp flattens with slope 1/(t + 1/psi)") {
    const double psi = 2.0, plateau = 0.5, t = 3.0;
    const auto w = burgers_evolve(OddConcaveProfile::ramp(psi, plateau), t);
    REQUIRE(w.breakpoints().size() == 1);
    const double slope = w.breakpoints()[0].v / w.breakpoints()[0].x;
    CHECK(slope == doctest::Approx(1.0 / (t + 1.0 / psi)).epsilon(1e-12));
    CHECK(w.plateau() == doctest::Approx(plateau));
}

TEST_CASE("zero data stays zero") {
    CHECK(burgers_evolve(OddConcaveProfile::zero(), 5.0).is_zero());
}

TEST_CASE("evolution is a semigroup") {
    wt::Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const auto w0 = wt::random_class_f(rng);
        const double s = wt::dyadic(rng, 1.0 / 64, 2.0, 64);
        const double t = wt::dyadic(rng, 1.0 / 64, 2.0, 64);
        const auto once = burgers_evolve(w0, s + t);
        const auto twice = burgers_evolve(burgers_evolve(w0, s), t);
        REQUIRE(once.breakpoints().size() == twice.breakpoints().size());
        for (std::size_t k = 0; k < once.breakpoints().size(); ++k) {
            CHECK(once.breakpoints()[k].x ==
                  doctest::Approx(twice.breakpoints()[k].x).epsilon(1e-12));
            CHECK(once.breakpoints()[k].v ==
                  doctest::Approx(twice.breakpoints()[k].v).epsilon(1e-12));
        }
        CHECK(once.plateau() == twice.plateau());
    }
}

TEST_CASE("evolution matches the variational oracle") {
    wt::Rng rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        const auto w0 = wt::random_class_f(rng);
        const double t = wt::dyadic(rng, 1.0 / 32, 2.5, 64);
        const auto w = burgers_evolve(w0, t);
        const double reach =
            (w.breakpoints().empty() ? 1.0 : w.breakpoints().back().x) * 1.3 +
            0.5;
        for (int i = 1; i <= 100; ++i) {
            const double x = reach * i / 100.0;
            const double expect = wt::lax_oleinik_value(w0, t, x);
            CHECK(w.value(x) == doctest::Approx(expect).epsilon(1e-8));
        }
    }
}

TEST_CASE("mass is conserved by the flow and raised by impulses") {
    wt::Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const auto w0 = wt::random_class_f(rng);
        const double t = wt::dyadic(rng, 0.1, 2.0, 64);
        CHECK(burgers_evolve(w0, t).plateau() == w0.plateau());

        const double dq = wt::dyadic(rng, 0.0, 0.05, 64);
        const double kappa = 20.0;
        const auto kicked = apply_impulse(w0, dq, kappa);
        CHECK(kicked.plateau() == doctest::Approx(w0.plateau() + kappa * dq));
        CHECK(kicked.origin_value() ==
              doctest::Approx(w0.origin_value() + kappa * dq));
    }
    CHECK_THROWS_AS(apply_impulse(OddConcaveProfile::zero(), -1e-3, 10.0), Error);
    // Tiny negative drops are float noise from the event log.
    CHECK(apply_impulse(OddConcaveProfile::zero(), -5e-13, 10.0).is_zero());
}

TEST_CASE("impulse examples") {
    const auto lifted = apply_impulse(OddConcaveProfile::zero(), 0.1, 10.0);
    CHECK(lifted.origin_value() == doctest::Approx(1.0));
    const auto same = apply_impulse(lifted, 0.0, 10.0);
    CHECK(profile_leq(same, lifted).margin == 0.0);
    CHECK(profile_leq(lifted, same).margin == 0.0);
}

TEST_CASE("solve_impulsive composes evolution and impulses") {
    // No events: pure evolution.
    const auto w0 = OddConcaveProfile::step(0.5);
    const auto plain = solve_impulsive(w0, {}, 20.0, 2.0);
    const auto direct = burgers_evolve(w0, 2.0);
    CHECK(profile_leq(plain, direct).margin == doctest::Approx(0.0));
    CHECK(profile_leq(direct, plain).margin == doctest::Approx(0.0));

    // One event at t1: evolve, kick by kappa dq, evolve the rest.
    InteractionEvent ev;
    ev.t = 0.5;
    ev.dq = 0.01;
    const double kappa = 20.0;
    const auto with_event = solve_impulsive(w0, {ev}, kappa, 2.0);
    const auto manual = burgers_evolve(
        apply_impulse(burgers_evolve(w0, 0.5), ev.dq, kappa), 1.5);
    CHECK(with_event.plateau() ==
          doctest::Approx(w0.plateau() + kappa * ev.dq));
    for (double x : {0.1, 0.4, 0.9, 1.7, 3.0})
        CHECK(with_event.value(x) == doctest::Approx(manual.value(x)).epsilon(1e-13));

    // Plateau telescopes over many events.
    EventLog log;
    double sum = 0.0;
    for (int k = 1; k <= 20; ++k) {
        InteractionEvent e;
        e.t = 0.1 * k;
        e.dq = 1e-3 * (k % 3);
        sum += e.dq;
        log.push_back(e);
    }
    const auto final = solve_impulsive(w0, log, kappa, 5.0);
    CHECK(final.plateau() == doctest::Approx(w0.plateau() + kappa * sum));
}

TEST_CASE("the flow is order preserving, impulses included") {
    wt::Rng rng(34);
    int done = 0;
    while (done < 200) {
        const auto a = wt::random_class_f(rng);
        // A dominating profile: lifted and value-scaled.
        const auto b = a.shifted(wt::dyadic(rng, 0.0, 0.3, 64))
                           .scaled(1.0 + wt::dyadic(rng, 0.0, 0.5, 64));
        REQUIRE(profile_leq(a, b).holds);

        EventLog log;
        InteractionEvent e;
        e.t = wt::dyadic(rng, 0.05, 0.5, 64);
        e.dq = wt::dyadic(rng, 0.0, 0.02, 64);
        log.push_back(e);
        const double t = wt::dyadic(rng, 0.6, 2.0, 64);
        const auto at = solve_impulsive(a, log, 20.0, t);
        const auto bt = solve_impulsive(b, log, 20.0, t);
        CHECK(profile_leq(at, bt).margin >= -1e-12);
        ++done;
    }
}

TEST_CASE("class invariance under long random schedules") {
    wt::Rng rng(35);
    for (int trial = 0; trial < 20; ++trial) {
        auto w = wt::random_class_f(rng);
        for (int step = 0; step < 50; ++step) {
            w = burgers_evolve(w, wt::dyadic(rng, 1e-3, 0.2, 64));
            w = apply_impulse(w, wt::dyadic(rng, 0.0, 1e-3, 64), 20.0);
            // Construction invariants hold (the constructor validates).
            CHECK(w.plateau() >= w.origin_value() - 1e-12);
        }
    }
}
