#include "wavedecay/scenario.hpp"

#include <algorithm>

#include "wavedecay/errors.hpp"
#include "wavedecay/io.hpp"

namespace wavedecay {

namespace {

int system_dim(const std::string& name) {
    if (name == "burgers") return 1;
    if (name == "p_system") return 2;
    throw ConfigError("system.name must be \"burgers\" or \"p_system\", got \"" +
                      name + "\"");
}

}  // namespace

SystemPtr Scenario::make_system() const {
    if (system_name == "burgers") return builtin_burgers(ref_state, tv_budget);
    return builtin_p_system(gamma, k, ref_state, tv_budget);
}

std::vector<int> Scenario::effective_families() const {
    if (!families.empty()) return families;
    std::vector<int> all;
    for (int i = 1; i <= system_dim(system_name); ++i) all.push_back(i);
    return all;
}

VerifyParams Scenario::verify_params() const {
    VerifyParams params;
    params.kappa = kappa;
    params.c0 = c0;
    params.delta = delta;
    params.tolerance = tolerance;
    params.limits = limits;
    return params;
}

Scenario parse_scenario(const std::string& json_text, const std::string& origin) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw ConfigError(origin + ": " + e.what());
    }

    try {
        Scenario sc;
        sc.schema_version = j.value("schema_version", 1);
        if (sc.schema_version != 1)
            throw ConfigError("schema_version: only version 1 is supported");
        sc.name = j.value("name", std::string("unnamed"));

        const Json& sys = j.at("system");
        sc.system_name = sys.at("name").get<std::string>();
        const int n = system_dim(sc.system_name);
        if (sc.system_name == "p_system") {
            sc.gamma = sys.at("gamma").get<double>();
            sc.k = sys.at("k").get<double>();
            if (!(sc.gamma > 1.0)) throw ConfigError("system.gamma must be > 1");
            if (!(sc.k > 0.0)) throw ConfigError("system.k must be > 0");
        }
        if (sys.contains("ref_state")) {
            const Json& ref = sys.at("ref_state");
            if (!ref.is_array() || static_cast<int>(ref.size()) != n)
                throw ConfigError("system.ref_state must have one entry per equation");
            for (int c = 0; c < n; ++c) sc.ref_state[c] = ref.at(c).get<double>();
        } else if (sc.system_name == "p_system") {
            sc.ref_state = {1.0, 0.0};
        }
        sc.tv_budget = sys.value("tv_budget", 0.3);
        if (!(sc.tv_budget > 0.0)) throw ConfigError("system.tv_budget must be > 0");

        sc.initial_data = function_from_json(j.at("initial_data"), n);
        if (sc.initial_data.jumps.empty())
            throw ConfigError("initial_data.jumps must not be empty");

        if (j.contains("family")) {
            const Json& fam = j.at("family");
            if (fam.is_number_integer()) {
                const int f = fam.get<int>();
                if (f != 0) sc.families = {f};
            } else if (fam.is_array()) {
                for (const Json& f : fam) sc.families.push_back(f.get<int>());
            } else {
                throw ConfigError("family must be an integer or a list");
            }
            for (int f : sc.families)
                if (f < 1 || f > n)
                    throw ConfigError("family index out of range for this system");
        }

        sc.delta = j.value("delta", 0.0);
        if (j.contains("delta") && !(sc.delta > 0.0))
            throw ConfigError("delta must be > 0");
        sc.kappa = j.value("kappa", 20.0);
        if (!(sc.kappa > 0.0)) throw ConfigError("kappa must be > 0");
        sc.c0 = j.value("c0", 10.0);
        if (!(sc.c0 > 0.0)) throw ConfigError("c0 must be > 0");
        sc.tolerance = j.value("tolerance", -1.0);
        sc.seed = j.value("seed", 0u);
        sc.out_dir = j.value("out_dir", std::string());

        for (const Json& t : j.value("times", Json::array()))
            sc.times.push_back(t.get<double>());
        if (sc.times.empty()) throw ConfigError("times must not be empty");
        for (double t : sc.times)
            if (!(t > 0.0)) throw ConfigError("times must be positive");
        std::sort(sc.times.begin(), sc.times.end());

        if (j.contains("limits")) {
            const Json& lim = j.at("limits");
            sc.limits.tv_cap = lim.value("tv_cap", 0.0);
            sc.limits.max_fronts = lim.value("max_fronts", sc.limits.max_fronts);
            sc.limits.max_events = lim.value("max_events", sc.limits.max_events);
        }
        return sc;
    } catch (const Json::exception& e) {
        throw ConfigError(origin + ": " + e.what());
    }
}

Scenario load_scenario(const std::string& path) {
    return parse_scenario(read_file(path), path);
}

}  // namespace wavedecay
