#include "wavedecay/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wavedecay/errors.hpp"

namespace wavedecay {

Json measure_to_json(const LineMeasure& m) {
    Json atoms = Json::array();
    for (const Atom& a : m.atoms()) atoms.push_back({a.pos, a.mass});
    Json density = Json::array();
    for (const DensityPiece& p : m.density())
        density.push_back({p.lo, p.hi, p.value});
    return Json{{"atoms", atoms}, {"density", density}};
}

LineMeasure measure_from_json(const Json& j) {
    std::vector<Atom> atoms;
    std::vector<DensityPiece> density;
    for (const Json& a : j.value("atoms", Json::array()))
        atoms.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
    for (const Json& p : j.value("density", Json::array()))
        density.push_back({p.at(0).get<double>(), p.at(1).get<double>(),
                           p.at(2).get<double>()});
    return LineMeasure(std::move(atoms), std::move(density));
}

Json profile_to_json(const OddConcaveProfile& p) {
    Json points = Json::array();
    for (const ProfilePoint& bp : p.breakpoints()) points.push_back({bp.x, bp.v});
    return Json{{"origin", p.origin_value()},
                {"points", points},
                {"plateau", p.plateau()}};
}

OddConcaveProfile profile_from_json(const Json& j) {
    std::vector<ProfilePoint> points;
    for (const Json& bp : j.value("points", Json::array()))
        points.push_back({bp.at(0).get<double>(), bp.at(1).get<double>()});
    return OddConcaveProfile(j.at("origin").get<double>(), std::move(points),
                             j.at("plateau").get<double>());
}

Json function_to_json(const PiecewiseConstantFn& fn, int n) {
    auto state_json = [n](const State& u) {
        Json arr = Json::array();
        for (int c = 0; c < n; ++c) arr.push_back(u[c]);
        return arr;
    };
    Json jumps = Json::array();
    for (const auto& jump : fn.jumps)
        jumps.push_back({{"x", jump.x}, {"value", state_json(jump.value)}});
    return Json{{"left", state_json(fn.left_value)}, {"jumps", jumps}};
}

PiecewiseConstantFn function_from_json(const Json& j, int n) {
    auto state_from = [n](const Json& arr) {
        if (!arr.is_array() || static_cast<int>(arr.size()) != n)
            throw ConfigError("state vector has the wrong dimension");
        State u{};
        for (int c = 0; c < n; ++c) u[c] = arr.at(c).get<double>();
        return u;
    };
    PiecewiseConstantFn fn;
    fn.left_value = state_from(j.at("left"));
    for (const Json& jump : j.value("jumps", Json::array()))
        fn.jumps.push_back(
            {jump.at("x").get<double>(), state_from(jump.at("value"))});
    fn.validate();
    return fn;
}

Json report_to_json(const DecayReport& report) {
    Json rows = Json::array();
    for (const DecayCheck& c : report.per_time) {
        rows.push_back({{"t", c.t},
                        {"family", c.family},
                        {"margin", c.margin},
                        {"holds", c.holds},
                        {"rearranged", profile_to_json(c.rearranged)},
                        {"comparison", profile_to_json(c.comparison)}});
    }
    Json q_series = Json::array();
    for (const auto& [t, q] : report.q_series) q_series.push_back({t, q});
    return Json{{"kappa", report.kappa_used},
                {"c0", report.c0_used},
                {"delta", report.delta_used},
                {"tolerance", report.tolerance_used},
                {"checks", rows},
                {"q_series", q_series}};
}

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string report_margins_csv(const DecayReport& report) {
    std::ostringstream os;
    os << "t,family,margin,holds\n";
    for (const DecayCheck& c : report.per_time)
        os << format_g17(c.t) << ',' << c.family << ',' << format_g17(c.margin)
           << ',' << (c.holds ? 1 : 0) << '\n';
    return os.str();
}

std::string report_qseries_csv(const DecayReport& report) {
    std::ostringstream os;
    os << "t,V,Q,upsilon\n";
    for (const auto& row : report.functional_series)
        os << format_g17(row[0]) << ',' << format_g17(row[1]) << ','
           << format_g17(row[2]) << ',' << format_g17(row[3]) << '\n';
    return os.str();
}

std::string profile_csv(const OddConcaveProfile& p) {
    std::ostringstream os;
    os << "x,value\n";
    os << "0," << format_g17(p.origin_value()) << '\n';
    for (const ProfilePoint& bp : p.breakpoints())
        os << format_g17(bp.x) << ',' << format_g17(bp.v) << '\n';
    // One tail sample so flat profiles still draw a line.
    const double tail =
        p.breakpoints().empty() ? 1.0 : 1.25 * p.breakpoints().back().x;
    os << format_g17(tail) << ',' << format_g17(p.plateau()) << '\n';
    return os.str();
}

std::string profile_series_csv(
    const std::vector<std::pair<double, const OddConcaveProfile*>>& series,
    int grid_points) {
    std::ostringstream os;
    os << "t,x,value\n";
    for (const auto& [t, profile] : series) {
        std::vector<double> xs{0.0};
        double reach = 1.0;
        if (!profile->breakpoints().empty())
            reach = 1.25 * profile->breakpoints().back().x;
        for (const ProfilePoint& bp : profile->breakpoints()) xs.push_back(bp.x);
        for (int i = 1; i <= grid_points; ++i)
            xs.push_back(reach * i / grid_points);
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        for (double x : xs)
            os << format_g17(t) << ',' << format_g17(x) << ','
               << format_g17(x == 0.0 ? profile->origin_value()
                                      : profile->value(x))
               << '\n';
    }
    return os.str();
}

std::string sweep_csv(const std::vector<std::pair<double, double>>& rows) {
    std::ostringstream os;
    os << "kappa,min_margin\n";
    for (const auto& [kappa, margin] : rows)
        os << format_g17(kappa) << ',' << format_g17(margin) << '\n';
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open for writing: " + tmp);
        out << contents;
        if (!out.flush()) throw Error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("rename failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace wavedecay
