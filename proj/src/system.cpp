#include "wavedecay/system.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "wavedecay/errors.hpp"

namespace wavedecay {

bool HyperbolicSystem::admissible(const State& u) const {
    for (int c = 0; c < n(); ++c)
        if (std::fabs(u[c] - ref_state_[c]) > tv_budget_ + 1e-9) return false;
    return true;
}

void HyperbolicSystem::require_admissible(const State& u, const char* where) const {
    if (admissible(u)) return;
    std::ostringstream os;
    os << where << ": state (" << u[0];
    if (n() == 2) os << ", " << u[1];
    os << ") outside the admissible box around (" << ref_state_[0];
    if (n() == 2) os << ", " << ref_state_[1];
    os << ") +- " << tv_budget_;
    throw NonAdmissibleState(os.str());
}

// ---------------------------------------------------------------------------
// Burgers

namespace {

class BurgersSystem final : public HyperbolicSystem {
public:
    BurgersSystem(State ref, double budget) : HyperbolicSystem(ref, budget) {}

    int n() const override { return 1; }
    std::string name() const override { return "burgers"; }

    State flux(const State& u) const override { return {0.5 * u[0] * u[0], 0.0}; }

    std::vector<EigenPair> eigen(const State& u) const override {
        return {{u[0], {1.0, 0.0}, {1.0, 0.0}}};
    }

    State wave_curve(int family, const State& u, double sigma) const override {
        if (family != 1) throw Error("burgers: family must be 1");
        return {u[0] + sigma, 0.0};
    }

    double shock_speed(int family, const State& ul, const State& ur) const override {
        if (family != 1) throw Error("burgers: family must be 1");
        return 0.5 * (ul[0] + ur[0]);
    }
};

// ---------------------------------------------------------------------------
// p-system, p(v) = k v^(-gamma)

class PSystem final : public HyperbolicSystem {
public:
    PSystem(double gamma, double k, State ref, double budget)
        : HyperbolicSystem(ref, budget), gamma_(gamma), k_(k) {
        if (!(gamma > 1.0)) throw Error("p_system: gamma must be > 1");
        if (!(k > 0.0)) throw Error("p_system: k must be > 0");
        if (ref[0] - budget <= 0.0)
            throw Error("p_system: admissible box must keep v > 0");
    }

    int n() const override { return 2; }
    std::string name() const override { return "p_system"; }

    double pressure(double v) const { return k_ * std::pow(v, -gamma_); }
    // c(v) = sqrt(-p'(v)), the characteristic speed magnitude.
    double sound(double v) const {
        return std::sqrt(k_ * gamma_) * std::pow(v, -(gamma_ + 1.0) / 2.0);
    }
    double sound_inv(double c) const {
        return std::pow(std::sqrt(k_ * gamma_) / c, 2.0 / (gamma_ + 1.0));
    }
    // Primitive of c: integral of c dv, so that d/dv primitive = c(v).
    double sound_primitive(double v) const {
        return -2.0 * std::sqrt(k_ * gamma_) / (gamma_ - 1.0) *
               std::pow(v, -(gamma_ - 1.0) / 2.0);
    }

    State flux(const State& u) const override {
        return {-u[1], pressure(u[0])};
    }

    std::vector<EigenPair> eigen(const State& u) const override {
        const double v = u[0];
        if (v <= 0.0) throw NonAdmissibleState("p_system: v <= 0");
        const double c = sound(v);
        // c'(v) < 0; |c'| = (gamma+1)/2 * c / v.
        const double abs_cp = 0.5 * (gamma_ + 1.0) * c / v;
        EigenPair e1, e2;
        e1.lambda = -c;
        e1.right = {1.0 / abs_cp, c / abs_cp};
        e1.left = {0.5 * abs_cp, 0.5 * abs_cp / c};
        e2.lambda = c;
        e2.right = {-1.0 / abs_cp, c / abs_cp};
        e2.left = {-0.5 * abs_cp, 0.5 * abs_cp / c};
        return {e1, e2};
    }

    State wave_curve(int family, const State& u, double sigma) const override {
        if (family != 1 && family != 2) throw Error("p_system: family must be 1 or 2");
        const double v0 = u[0];
        if (v0 <= 0.0) throw NonAdmissibleState("p_system: v <= 0");
        const double c0 = sound(v0);
        // lambda_1 = -c, lambda_2 = +c; sigma shifts lambda on both branches.
        const double c1 = family == 1 ? c0 - sigma : c0 + sigma;
        if (!(c1 > 0.0))
            throw NonAdmissibleState("p_system: wave curve reaches vacuum");
        const double v1 = sound_inv(c1);

        if (sigma >= 0.0) {
            // Rarefaction branch: du = +-c(v) dv along the integral curve.
            const double dP = sound_primitive(v1) - sound_primitive(v0);
            const double u1 = family == 1 ? u[1] + dP : u[1] - dP;
            return {v1, u1};
        }
        // Shock branch (Lax admissible: v decreases for family 1, increases
        // for family 2). |[u]| = sqrt(-[p][v]); u drops along the forward
        // curve for both families, tangent to the rarefaction side at 0.
        const double jump =
            std::sqrt(-(pressure(v1) - pressure(v0)) * (v1 - v0));
        return {v1, u[1] - jump};
    }

    double shock_speed(int family, const State& ul, const State& ur) const override {
        const double dv = ur[0] - ul[0];
        if (std::fabs(dv) < 1e-300) return 0.5 * (eigen(ul)[family - 1].lambda +
                                                  eigen(ur)[family - 1].lambda);
        const double s2 = -(pressure(ur[0]) - pressure(ul[0])) / dv;
        const double s = std::sqrt(std::max(s2, 0.0));
        return family == 1 ? -s : s;
    }

private:
    double gamma_;
    double k_;
};

void check_strict_hyperbolicity(const HyperbolicSystem& sys) {
    if (sys.n() == 1) return;
    const State ref = sys.ref_state();
    const double b = sys.tv_budget();
    double min_gap = std::numeric_limits<double>::infinity();
    const int grid = 5;
    for (int i = 0; i <= grid; ++i) {
        for (int j = 0; j <= grid; ++j) {
            State u = {ref[0] - b + 2.0 * b * i / grid,
                       ref[1] - b + 2.0 * b * j / grid};
            const auto e = sys.eigen(u);
            min_gap = std::min(min_gap, e[1].lambda - e[0].lambda);
        }
    }
    if (!(min_gap > 0.0))
        throw Error("system is not strictly hyperbolic on the admissible box");
}

}  // namespace

SystemPtr builtin_burgers(State ref_state, double tv_budget) {
    if (!(tv_budget > 0.0)) throw Error("burgers: tv_budget must be > 0");
    return std::make_shared<BurgersSystem>(ref_state, tv_budget);
}

SystemPtr builtin_p_system(double gamma, double k, State ref_state,
                           double tv_budget) {
    if (!(tv_budget > 0.0)) throw Error("p_system: tv_budget must be > 0");
    auto sys = std::make_shared<PSystem>(gamma, k, ref_state, tv_budget);
    check_strict_hyperbolicity(*sys);
    return sys;
}

// ---------------------------------------------------------------------------
// Riemann solver

namespace {

State compose_waves(const HyperbolicSystem& sys, const State& u_minus,
                    const std::vector<double>& sigma) {
    State u = u_minus;
    for (int i = 1; i <= sys.n(); ++i) u = sys.wave_curve(i, u, sigma[i - 1]);
    return u;
}

}  // namespace

RiemannFan riemann_solve(const HyperbolicSystem& sys, const State& u_minus,
                         const State& u_plus) {
    sys.require_admissible(u_minus, "riemann_solve");
    sys.require_admissible(u_plus, "riemann_solve");

    const int n = sys.n();
    std::vector<double> sigma(n, 0.0);

    if (n == 1) {
        sigma[0] = sys.eigen(u_plus)[0].lambda - sys.eigen(u_minus)[0].lambda;
    } else {
        // Newton on (sigma_1, sigma_2) -> W2(sigma_2, W1(sigma_1, u-)) - u+,
        // started from the linearized strengths l_i . (u+ - u-).
        const State mid = {0.5 * (u_minus[0] + u_plus[0]),
                           0.5 * (u_minus[1] + u_plus[1])};
        const auto e = sys.eigen(mid);
        const State d = state_sub(u_plus, u_minus);
        for (int i = 0; i < n; ++i)
            sigma[i] = e[i].left[0] * d[0] + e[i].left[1] * d[1];

        const double fd = 1e-7;
        bool done = false;
        for (int it = 0; it < 100; ++it) {
            const State g = state_sub(compose_waves(sys, u_minus, sigma), u_plus);
            if (state_norm(g) <= 1e-13) {
                done = true;
                break;
            }
            double jac[2][2];
            for (int j = 0; j < n; ++j) {
                std::vector<double> sp = sigma, sm = sigma;
                sp[j] += fd;
                sm[j] -= fd;
                const State gp = compose_waves(sys, u_minus, sp);
                const State gm = compose_waves(sys, u_minus, sm);
                jac[0][j] = (gp[0] - gm[0]) / (2.0 * fd);
                jac[1][j] = (gp[1] - gm[1]) / (2.0 * fd);
            }
            const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
            if (std::fabs(det) < 1e-14)
                throw NoConvergence("riemann_solve: singular Jacobian");
            sigma[0] -= (jac[1][1] * g[0] - jac[0][1] * g[1]) / det;
            sigma[1] -= (-jac[1][0] * g[0] + jac[0][0] * g[1]) / det;
        }
        if (!done) {
            const State g = state_sub(compose_waves(sys, u_minus, sigma), u_plus);
            if (state_norm(g) > 1e-12)
                throw NoConvergence("riemann_solve: Newton did not converge");
        }
    }

    RiemannFan fan;
    fan.states.push_back(u_minus);
    for (int i = 1; i <= n; ++i) {
        const State next = sys.wave_curve(i, fan.states.back(), sigma[i - 1]);
        sys.require_admissible(next, "riemann_solve");
        fan.states.push_back(next);
    }
    fan.strengths = sigma;
    for (int i = 1; i <= n; ++i) {
        const State& wl = fan.states[i - 1];
        const State& wr = fan.states[i];
        SpeedRange sp;
        if (sigma[i - 1] >= 0.0) {
            sp.lo = sys.eigen(wl)[i - 1].lambda;
            sp.hi = sys.eigen(wr)[i - 1].lambda;
        } else {
            sp.lo = sp.hi = sys.shock_speed(i, wl, wr);
        }
        fan.speeds.push_back(sp);
    }
    return fan;
}

double normalization_residual(const HyperbolicSystem& sys,
                              const std::vector<State>& samples) {
    double worst = 0.0;
    const double h = 1e-6;
    for (const State& u : samples) {
        const auto e = sys.eigen(u);
        for (int i = 0; i < sys.n(); ++i) {
            // grad(lambda_i) . r_i by central differences along r_i.
            State up = u, um = u;
            for (int c = 0; c < sys.n(); ++c) {
                up[c] += h * e[i].right[c];
                um[c] -= h * e[i].right[c];
            }
            const double dldr =
                (sys.eigen(up)[i].lambda - sys.eigen(um)[i].lambda) / (2.0 * h);
            worst = std::max(worst, std::fabs(dldr - 1.0));
            for (int j = 0; j < sys.n(); ++j) {
                const double dot =
                    e[i].left[0] * e[j].right[0] + e[i].left[1] * e[j].right[1];
                worst = std::max(worst, std::fabs(dot - (i == j ? 1.0 : 0.0)));
            }
        }
    }
    return worst;
}

}  // namespace wavedecay
