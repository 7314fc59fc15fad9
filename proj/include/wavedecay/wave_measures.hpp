#pragma once

#include <array>

#include "wavedecay/measure.hpp"
#include "wavedecay/piecewise_fn.hpp"
#include "wavedecay/system.hpp"

namespace wavedecay {

// Per-family wave content of a piecewise-constant state: each jump of the
// function contributes, for every family i, an atom at the jump point whose
// mass is the signed strength sigma_i of the i-wave in the local Riemann
// solution. Purely atomic for piecewise-constant input.
struct WaveDecomposition {
    int n = 1;
    std::array<LineMeasure, 2> per_family{};  // index family-1

    const LineMeasure& family(int i) const { return per_family[i - 1]; }
};

WaveDecomposition wave_measures(const HyperbolicSystem& sys,
                                const PiecewiseConstantFn& u);

// Total wave strength: sum over families of |mu_i|(R).
double glimm_V(const WaveDecomposition& d);

// Interaction potential: for families j > i, pairs with the j-atom strictly
// left of the i-atom; within one family, ordered pairs (negative-part atom,
// total-variation atom) at distinct positions. A pair of shocks of one
// family is counted once in each order.
double glimm_Q(const WaveDecomposition& d);

// V + C0 * Q, the functional that is non-increasing along solutions when
// C0 is large enough.
double glimm_upsilon(const WaveDecomposition& d, double c0);

}  // namespace wavedecay
