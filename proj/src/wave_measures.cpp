#include "wavedecay/wave_measures.hpp"

#include <cmath>
#include <limits>

#include "wavedecay/errors.hpp"

namespace wavedecay {

double PiecewiseConstantFn::total_variation(int n) const {
    double tv = 0.0;
    State prev = left_value;
    for (const Jump& j : jumps) {
        for (int c = 0; c < n; ++c) tv += std::fabs(j.value[c] - prev[c]);
        prev = j.value;
    }
    return tv;
}

void PiecewiseConstantFn::validate() const {
    double prev = -std::numeric_limits<double>::infinity();
    for (const Jump& j : jumps) {
        if (!(j.x > prev))
            throw Error("PiecewiseConstantFn: jump positions must increase");
        prev = j.x;
    }
}

WaveDecomposition wave_measures(const HyperbolicSystem& sys,
                                const PiecewiseConstantFn& u) {
    u.validate();
    WaveDecomposition d;
    d.n = sys.n();
    std::array<std::vector<Atom>, 2> atoms;

    State left = u.left_value;
    for (const auto& jump : u.jumps) {
        const RiemannFan fan = riemann_solve(sys, left, jump.value);
        for (int i = 1; i <= sys.n(); ++i) {
            const double sigma = fan.strengths[i - 1];
            if (std::fabs(sigma) > 1e-14)
                atoms[i - 1].push_back({jump.x, sigma});
        }
        left = jump.value;
    }
    for (int i = 0; i < sys.n(); ++i)
        d.per_family[i] = LineMeasure(std::move(atoms[i]), {});
    return d;
}

double glimm_V(const WaveDecomposition& d) {
    double v = 0.0;
    for (int i = 1; i <= d.n; ++i) v += d.family(i).total_variation();
    return v;
}

double glimm_Q(const WaveDecomposition& d) {
    double q = 0.0;
    // Cross-family term: j-atom strictly to the left of an i-atom, j > i.
    for (int i = 1; i <= d.n; ++i) {
        for (int j = i + 1; j <= d.n; ++j) {
            for (const Atom& aj : d.family(j).atoms()) {
                for (const Atom& ai : d.family(i).atoms()) {
                    if (aj.pos < ai.pos)
                        q += std::fabs(aj.mass) * std::fabs(ai.mass);
                }
            }
        }
    }
    // Same-family term: (negative part) x (total variation), x != y.
    for (int i = 1; i <= d.n; ++i) {
        const auto& atoms = d.family(i).atoms();
        for (const Atom& a : atoms) {
            if (a.mass >= 0.0) continue;
            for (const Atom& b : atoms) {
                if (a.pos == b.pos) continue;
                q += std::fabs(a.mass) * std::fabs(b.mass);
            }
        }
    }
    return q;
}

double glimm_upsilon(const WaveDecomposition& d, double c0) {
    if (!(c0 > 0.0)) throw Error("glimm_upsilon: C0 must be positive");
    return glimm_V(d) + c0 * glimm_Q(d);
}

}  // namespace wavedecay
