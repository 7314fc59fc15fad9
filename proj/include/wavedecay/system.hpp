#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

namespace wavedecay {

// State vector; only the first n() components are meaningful.
using State = std::array<double, 2>;

inline State state_sub(const State& a, const State& b) {
    return {a[0] - b[0], a[1] - b[1]};
}
inline State state_add(const State& a, const State& b) {
    return {a[0] + b[0], a[1] + b[1]};
}
inline double state_norm(const State& a) {
    return std::max(std::abs(a[0]), std::abs(a[1]));
}

struct EigenPair {
    double lambda = 0.0;
    State right{};  // r_i, normalized so that grad(lambda_i) . r_i = 1
    State left{};   // l_i, dual basis: l_i . r_j = delta_ij
};

// Wave speed bracket: a shock carries one speed (lo == hi), a rarefaction
// carries its edge characteristic speeds.
struct SpeedRange {
    double lo = 0.0;
    double hi = 0.0;
};

// Solution structure of a Riemann problem: intermediate states
// omega_0 = u_minus, ..., omega_n = u_plus, one signed strength per family
// (positive = rarefaction, negative = shock) and the wave speeds.
struct RiemannFan {
    std::vector<State> states;       // n + 1 entries
    std::vector<double> strengths;   // n entries, sigma_i = lambda_i(w_i) - lambda_i(w_{i-1})
    std::vector<SpeedRange> speeds;  // n entries
};

// A strictly hyperbolic, genuinely nonlinear system with the eigenvector
// normalization grad(lambda_i) . r_i = 1. States are checked against a box
// around a reference state with half-width tv_budget.
class HyperbolicSystem {
public:
    virtual ~HyperbolicSystem() = default;

    virtual int n() const = 0;
    virtual std::string name() const = 0;
    virtual State flux(const State& u) const = 0;
    virtual std::vector<EigenPair> eigen(const State& u) const = 0;

    // State reached from u along the forward i-family wave curve with
    // signed strength sigma; the curve is parametrized so that
    // lambda_i(result) = lambda_i(u) + sigma on both branches.
    virtual State wave_curve(int family, const State& u, double sigma) const = 0;

    // Exact Rankine-Hugoniot speed of the i-shock joining u_left to u_right
    // (u_right on the shock branch of the wave curve through u_left).
    virtual double shock_speed(int family, const State& u_left,
                               const State& u_right) const = 0;

    const State& ref_state() const { return ref_state_; }
    double tv_budget() const { return tv_budget_; }
    bool admissible(const State& u) const;
    void require_admissible(const State& u, const char* where) const;

protected:
    HyperbolicSystem(State ref_state, double tv_budget)
        : ref_state_(ref_state), tv_budget_(tv_budget) {}

    State ref_state_{};
    double tv_budget_ = 0.3;
};

using SystemPtr = std::shared_ptr<const HyperbolicSystem>;

// Scalar Burgers equation u_t + (u^2/2)_x = 0; lambda = u, l = r = 1.
SystemPtr builtin_burgers(State ref_state = {0.0, 0.0}, double tv_budget = 0.3);

// Isentropic gas dynamics in Lagrangian coordinates:
//   v_t - u_x = 0,  u_t + p(v)_x = 0,  p(v) = k v^(-gamma),
// strictly hyperbolic for v > 0 with eigenvalues -c(v) < c(v),
// c = sqrt(-p'(v)). Requires gamma > 1 and k > 0.
SystemPtr builtin_p_system(double gamma, double k, State ref_state = {1.0, 0.0},
                           double tv_budget = 0.3);

// Solves the Riemann problem (u_minus, u_plus). Newton iteration on the
// composed wave-curve map for n = 2, direct for n = 1; the residual
// |omega_n - u_plus| is at most 1e-12.
RiemannFan riemann_solve(const HyperbolicSystem& sys, const State& u_minus,
                         const State& u_plus);

// Max residual of the normalization grad(lambda_i).r_i = 1 and
// l_i.r_j = delta_ij over the given states, gradients taken by central
// finite differences. Used by validation and tests.
double normalization_residual(const HyperbolicSystem& sys,
                              const std::vector<State>& samples);

}  // namespace wavedecay
