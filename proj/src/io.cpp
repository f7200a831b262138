#include "fsw/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fsw {

namespace {

using Json = nlohmann::ordered_json;

double max_residual(const SolverReport& report) {
    double worst = 0.0;
    for (double r : report.residuals) worst = std::max(worst, r);
    return worst;
}

double crossing_energy(double R, double theta) {
    double u = R * std::cos(theta);
    return u * u;  // natural units: E = u^2
}

} // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::w_plane: return "w-plane";
        case Method::z_plane: return "z-plane";
        default: return "classical";
    }
}

const char* axis_name(Axis a) { return a == Axis::real_axis ? "real" : "imag"; }

const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

Method method_from_name(const std::string& name) {
    if (name == "w-plane" || name == "w_plane") return Method::w_plane;
    if (name == "z-plane" || name == "z_plane") return Method::z_plane;
    if (name == "classical") return Method::classical;
    throw std::invalid_argument("unknown method: " + name);
}

Axis axis_from_name(const std::string& name) {
    if (name == "real") return Axis::real_axis;
    if (name == "imag") return Axis::imag_axis;
    throw std::invalid_argument("unknown axis: " + name);
}

Parity parity_from_name(const std::string& name) {
    if (name == "even") return Parity::even;
    if (name == "odd") return Parity::odd;
    throw std::invalid_argument("unknown parity: " + name);
}

std::string states_csv(const SolverReport& report, const WellParameters* well) {
    std::string out = "n,parity,theta,u,v,energy";
    if (well) out += ",energy_J,energy_eV";
    out += "\n";
    for (const auto& s : report.physical) {
        out += std::to_string(s.level_index);
        out += ",";
        out += parity_name(s.parity);
        out += "," + format_double(s.theta);
        out += "," + format_double(s.u);
        out += "," + format_double(s.v);
        out += "," + format_double(s.binding_energy);
        if (well) {
            double joules = energy_from_u(*well, s.u);
            out += "," + format_double(joules);
            out += "," + format_double(joules / 1.602176634e-19);
        }
        out += "\n";
    }
    return out;
}

std::string crossings_csv(const SolverReport& report) {
    std::string out = "theta,axis,multiplicity,u,v,parity,energy\n";
    for (const auto& c : report.all_crossings) {
        out += format_double(c.theta);
        out += ",";
        out += axis_name(c.axis);
        out += "," + std::to_string(c.multiplicity_tag);
        out += "," + format_double(report.R * std::cos(c.theta));
        out += "," + format_double(report.R * std::sin(c.theta));
        out += ",";
        out += parity_name(c.axis == Axis::imag_axis ? Parity::even : Parity::odd);
        out += "," + format_double(crossing_energy(report.R, c.theta));
        out += "\n";
    }
    return out;
}

std::string report_json(const SolverReport& report) {
    Json j;
    j["R"] = report.R;
    j["method"] = method_name(report.method);
    j["crossings"] = Json::array();
    for (const auto& c : report.all_crossings)
        j["crossings"].push_back({{"theta", c.theta},
                                  {"axis", axis_name(c.axis)},
                                  {"mult", c.multiplicity_tag}});
    j["states"] = Json::array();
    for (const auto& s : report.physical)
        j["states"].push_back({{"n", s.level_index},
                               {"parity", parity_name(s.parity)},
                               {"u", s.u},
                               {"v", s.v},
                               {"theta", s.theta},
                               {"E", s.binding_energy}});
    j["residual_max"] = max_residual(report);
    return j.dump(2) + "\n";
}

SolverReport report_from_json(const std::string& text) {
    Json j = Json::parse(text);
    SolverReport report;
    report.R = j.at("R").get<double>();
    report.method = method_from_name(j.at("method").get<std::string>());
    for (const auto& c : j.at("crossings"))
        report.all_crossings.push_back({c.at("theta").get<double>(),
                                        axis_from_name(c.at("axis").get<std::string>()),
                                        c.at("mult").get<int>()});
    for (const auto& s : j.at("states")) {
        BoundState state;
        state.level_index = s.at("n").get<int>();
        state.parity = parity_from_name(s.at("parity").get<std::string>());
        state.u = s.at("u").get<double>();
        state.v = s.at("v").get<double>();
        state.theta = s.at("theta").get<double>();
        state.binding_energy = s.at("E").get<double>();
        report.physical.push_back(state);
    }
    report.residuals.push_back(j.at("residual_max").get<double>());
    return report;
}

std::string polyline_csv(const Polyline& line) {
    std::string out = "re,im\n";
    auto row = [&](Complex p) {
        out += format_double(p.real()) + "," + format_double(p.imag()) + "\n";
    };
    for (Complex p : line.points) row(p);
    if (line.closed && !line.points.empty()) row(line.points.front());
    return out;
}

std::string sweep_csv(const SweepResult& sweep) {
    std::string out = "R,count,level,energy,dE_dR\n";
    for (std::size_t i = 0; i < sweep.R_grid.size(); ++i)
        for (std::size_t n = 0; n < sweep.energies[i].size(); ++n) {
            out += format_double(sweep.R_grid[i]);
            out += "," + std::to_string(sweep.state_counts[i]);
            out += "," + std::to_string(n);
            out += "," + format_double(sweep.energies[i][n]);
            out += "," + format_double(sweep.dE_dR[i][n]);
            out += "\n";
        }
    return out;
}

std::string sweep_json(const SweepResult& sweep) {
    Json j;
    j["R_grid"] = sweep.R_grid;
    j["state_counts"] = sweep.state_counts;
    j["energies"] = sweep.energies;
    j["dE_dR"] = sweep.dE_dR;  // NaN serializes as null
    return j.dump(2) + "\n";
}

} // namespace fsw
