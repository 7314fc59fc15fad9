#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavedecay/burgers_flow.hpp"
#include "wavedecay/errors.hpp"
#include "wavedecay/front_tracking.hpp"
#include "wavedecay/io.hpp"
#include "wavedecay/log.hpp"
#include "wavedecay/scenario.hpp"
#include "wavedecay/verifier.hpp"
#include "wavedecay/wave_measures.hpp"

namespace fs = std::filesystem;
using namespace wavedecay;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOrderFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

std::vector<double> parse_times(const std::string& spec) {
    std::vector<double> times;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) times.push_back(std::stod(item));
    return times;
}

// "a,b,c" or "lo:hi:count".
std::vector<double> parse_kappa_range(const std::string& spec) {
    std::vector<double> values;
    if (spec.find(':') != std::string::npos) {
        double lo = 0.0, hi = 0.0;
        int count = 0;
        if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 ||
            count < 1)
            throw ConfigError("kappa range must be lo:hi:count");
        for (int i = 0; i < count; ++i)
            values.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
        return values;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) values.push_back(std::stod(item));
    return values;
}

struct CommonArgs {
    std::string scenario_path;
    std::string out_dir;  // empty = scenario's out_dir, else "."
    double kappa = -1.0;
    double delta = -1.0;
    std::string times_spec;
    long seed = -1;
    std::string format = "json";

    std::string resolve_out(const std::string& scenario_default) const {
        if (!out_dir.empty()) return out_dir;
        return scenario_default.empty() ? "." : scenario_default;
    }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool need_scenario = true) {
    auto* opt = cmd->add_option("--scenario", args.scenario_path,
                                "Scenario JSON file");
    if (need_scenario) opt->required();
    cmd->add_option("--out", args.out_dir, "Output directory");
    cmd->add_option("--kappa", args.kappa, "Override the impulse constant");
    cmd->add_option("--delta", args.delta, "Override the front-splitting width");
    cmd->add_option("--times", args.times_spec,
                    "Override output times, comma separated");
    cmd->add_option("--seed", args.seed, "Override the scenario seed");
    cmd->add_option("--format", args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

Scenario load_with_overrides(const CommonArgs& args) {
    Scenario sc = load_scenario(args.scenario_path);
    if (args.kappa > 0.0) sc.kappa = args.kappa;
    if (args.delta > 0.0) sc.delta = args.delta;
    if (!args.times_spec.empty()) {
        sc.times = parse_times(args.times_spec);
        if (sc.times.empty()) throw ConfigError("--times parsed to an empty list");
        for (double t : sc.times)
            if (!(t > 0.0)) throw ConfigError("--times must be positive");
    }
    if (args.seed >= 0) sc.seed = static_cast<unsigned>(args.seed);
    return sc;
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory " + dir);
}

int run_verify(const CommonArgs& args) {
    const Scenario sc = load_with_overrides(args);
    const fs::path out(args.resolve_out(sc.out_dir));
    ensure_out_dir(out.string());
    const SystemPtr sys = sc.make_system();

    const DecayReport report = verify_decay(sys, sc.initial_data,
                                            sc.effective_families(), sc.times,
                                            sc.verify_params());
    write_file_atomic((out / "report.json").string(),
                      report_to_json(report).dump(2) + "\n");
    write_file_atomic((out / "margins.csv").string(),
                      report_margins_csv(report));
    write_file_atomic((out / "qseries.csv").string(),
                      report_qseries_csv(report));
    for (int family : sc.effective_families()) {
        std::vector<std::pair<double, const OddConcaveProfile*>> rearranged;
        std::vector<std::pair<double, const OddConcaveProfile*>> comparison;
        for (const DecayCheck& c : report.per_time) {
            if (c.family != family) continue;
            rearranged.emplace_back(c.t, &c.rearranged);
            comparison.emplace_back(c.t, &c.comparison);
        }
        const std::string tag = "_f" + std::to_string(family) + ".csv";
        write_file_atomic((out / ("profiles_rearranged" + tag)).string(),
                          profile_series_csv(rearranged));
        write_file_atomic((out / ("profiles_comparison" + tag)).string(),
                          profile_series_csv(comparison));
    }

    for (const DecayCheck& c : report.per_time)
        std::printf("t=%-8g family=%d margin=% .6e %s\n", c.t, c.family,
                    c.margin, c.holds ? "holds" : "FAILS");
    if (!report.all_hold()) {
        std::fprintf(stderr, "wavedecay: ordering failed, min margin %.6e\n",
                     report.min_margin());
        return kExitOrderFailure;
    }
    return kExitOk;
}

int run_sweep(const CommonArgs& args, const std::string& kappa_range) {
    const std::vector<double> kappas = parse_kappa_range(kappa_range);
    if (kappas.empty()) throw ConfigError("--kappa-range is empty");
    const Scenario sc = load_with_overrides(args);
    const fs::path out(args.resolve_out(sc.out_dir));
    ensure_out_dir(out.string());
    const SystemPtr sys = sc.make_system();

    std::vector<std::pair<double, double>> rows;
    for (double kappa : kappas) {
        VerifyParams params = sc.verify_params();
        params.kappa = kappa;
        const DecayReport report = verify_decay(
            sys, sc.initial_data, sc.effective_families(), sc.times, params);
        rows.emplace_back(kappa, report.min_margin());
        std::printf("kappa=%-8g min_margin=% .6e\n", kappa, report.min_margin());
    }
    write_file_atomic((out / "sweep.csv").string(), sweep_csv(rows));
    return kExitOk;
}

int run_simulate(const CommonArgs& args) {
    const Scenario sc = load_with_overrides(args);
    const fs::path out(args.resolve_out(sc.out_dir));
    ensure_out_dir(out.string());
    const SystemPtr sys = sc.make_system();

    const double tv0 = sc.initial_data.total_variation(sys->n());
    const double delta = sc.delta > 0.0 ? sc.delta : 1e-2 * tv0;
    const double t_end = sc.times.back();

    EvolveOptions opts;
    opts.snapshot_times = sc.times;
    opts.limits = sc.limits;
    const Trajectory traj = run_front_tracking(sys, sc.initial_data, delta,
                                               t_end, opts);

    // One JSON record per line: requested samples plus every event.
    struct Row {
        double t;
        const char* kind;
    };
    std::vector<Row> rows;
    rows.push_back({0.0, "sample"});
    for (double t : sc.times) rows.push_back({t, "sample"});
    for (const InteractionEvent& ev : traj.events())
        rows.push_back({ev.t, "event"});
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.t < b.t; });

    std::ostringstream lines;
    for (const Row& row : rows) {
        const FrontState st = traj.state_at(row.t);
        const WaveDecomposition d = decomposition_of(st, sys->n());
        Json rec{{"t", row.t},
                 {"kind", row.kind},
                 {"solution", function_to_json(st.to_function(), sys->n())},
                 {"V", glimm_V(d)},
                 {"Q", glimm_Q(d)},
                 {"upsilon", glimm_upsilon(d, sc.c0)}};
        lines << rec.dump() << '\n';
    }
    write_file_atomic((out / "trajectory.jsonl").string(), lines.str());
    std::printf("simulated to t=%g: %zu events, %zu fronts at the end\n", t_end,
                traj.events().size(), traj.final_state().fronts.size());
    return kExitOk;
}

int run_rearrange(const CommonArgs& args, const std::string& measure_path) {
    const fs::path out(args.resolve_out(""));
    ensure_out_dir(out.string());
    const LineMeasure m = measure_from_json(Json::parse(read_file(measure_path)));
    const OddConcaveProfile profile = odd_rearrangement(m.positive_part());
    if (args.format == "csv") {
        write_file_atomic((out / "profile.csv").string(), profile_csv(profile));
    } else {
        write_file_atomic((out / "profile.json").string(),
                          profile_to_json(profile).dump(2) + "\n");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"front tracking for 1-D conservation laws with decay-order "
                 "verification of positive waves"};
    app.require_subcommand(1);

    CommonArgs verify_args, sweep_args, simulate_args, rearrange_args;
    std::string kappa_range, measure_path;

    CLI::App* verify = app.add_subcommand(
        "verify", "Check the positive-wave decay ordering for a scenario");
    add_common(verify, verify_args);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Scan kappa and report the minimal ordering margin");
    add_common(sweep, sweep_args);
    sweep->add_option("--kappa-range", kappa_range,
                      "Comma list or lo:hi:count")->required();

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run front tracking only and export the trajectory");
    add_common(simulate, simulate_args);

    CLI::App* rearrange = app.add_subcommand(
        "rearrange", "Odd rearrangement of a measure JSON file");
    add_common(rearrange, rearrange_args, /*need_scenario=*/false);
    rearrange->add_option("--measure", measure_path, "Measure JSON file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (verify->parsed()) return run_verify(verify_args);
        if (sweep->parsed()) return run_sweep(sweep_args, kappa_range);
        if (simulate->parsed()) return run_simulate(simulate_args);
        if (rearrange->parsed()) return run_rearrange(rearrange_args, measure_path);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "wavedecay: config error: %s\n", e.what());
        return kExitConfig;
    } catch (const BudgetExceeded& e) {
        std::fprintf(stderr, "wavedecay: budget error: %s\n", e.what());
        return kExitBudget;
    } catch (const Error& e) {
        std::fprintf(stderr, "wavedecay: error: %s\n", e.what());
        return kExitBudget;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "wavedecay: %s\n", e.what());
        return kExitConfig;
    }
    return kExitConfig;
}
