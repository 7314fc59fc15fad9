#pragma once

#include <string>

#include <json.hpp>

#include "wavedecay/measure.hpp"
#include "wavedecay/piecewise_fn.hpp"
#include "wavedecay/profile.hpp"
#include "wavedecay/verifier.hpp"

namespace wavedecay {

using Json = nlohmann::json;

// JSON wire formats (also used for golden files):
//   measure:  {"atoms": [[x, m], ...], "density": [[a, b, v], ...]}
//   profile:  {"origin": v, "points": [[x, v], ...], "plateau": v}
Json measure_to_json(const LineMeasure& m);
LineMeasure measure_from_json(const Json& j);

Json profile_to_json(const OddConcaveProfile& p);
OddConcaveProfile profile_from_json(const Json& j);

Json function_to_json(const PiecewiseConstantFn& fn, int n);
PiecewiseConstantFn function_from_json(const Json& j, int n);

Json report_to_json(const DecayReport& report);

// CSV exports use fixed 17-significant-digit formatting so outputs are
// byte-stable across runs.
std::string format_g17(double v);
std::string report_margins_csv(const DecayReport& report);
std::string report_qseries_csv(const DecayReport& report);
std::string profile_csv(const OddConcaveProfile& p);
// Time series of profiles, columns t,x,value: every breakpoint plus a
// uniform grid, for plotting.
std::string profile_series_csv(
    const std::vector<std::pair<double, const OddConcaveProfile*>>& series,
    int grid_points = 64);
std::string sweep_csv(const std::vector<std::pair<double, double>>& rows);

// Whole-file atomic write (write to a temporary, then rename).
void write_file_atomic(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace wavedecay
