#pragma once

#include <vector>

#include "wavedecay/system.hpp"

namespace wavedecay {

// A vector-valued function with finitely many jumps, constant between them.
// `left_value` is the state at -infinity; `jumps[k].value` is the state
// immediately right of jumps[k].x. Jump positions strictly increase.
struct PiecewiseConstantFn {
    struct Jump {
        double x;
        State value;
    };

    State left_value{};
    std::vector<Jump> jumps;

    State value_at(double x) const {
        State v = left_value;
        for (const Jump& j : jumps) {
            if (j.x > x) break;
            v = j.value;
        }
        return v;
    }
    State right_value() const {
        return jumps.empty() ? left_value : jumps.back().value;
    }
    // Sum over jumps of the 1-norm of the state difference.
    double total_variation(int n) const;
    void validate() const;  // strictly increasing jump positions
};

}  // namespace wavedecay
