#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wavedecay/front_tracking.hpp"
#include "wavedecay/piecewise_fn.hpp"
#include "wavedecay/system.hpp"
#include "wavedecay/verifier.hpp"

namespace wavedecay {

// A fully specified run: system, initial data and all knobs. Parsed from a
// versioned JSON file; all fields are validated on load and every numeric
// parameter has a documented default.
struct Scenario {
    int schema_version = 1;
    std::string name;

    std::string system_name;  // "burgers" or "p_system"
    double gamma = 1.4;       // p_system only
    double k = 1.0;           // p_system only
    State ref_state{};
    double tv_budget = 0.3;

    PiecewiseConstantFn initial_data;
    std::vector<int> families;  // empty = all families of the system

    double delta = 0.0;       // 0 = auto (1e-2 * initial TV)
    double kappa = 20.0;
    double c0 = 10.0;
    double tolerance = -1.0;  // < 0 = auto (1e-8 + 2 delta TV)
    std::vector<double> times;
    unsigned seed = 0;
    std::string out_dir;  // default output directory; --out overrides

    EvolveLimits limits;

    SystemPtr make_system() const;
    std::vector<int> effective_families() const;
    VerifyParams verify_params() const;
};

Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text, const std::string& origin);

}  // namespace wavedecay
