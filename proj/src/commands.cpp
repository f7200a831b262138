#include "fsw/commands.hpp"

#include "fsw/io.hpp"
#include "fsw/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <vector>

namespace fsw {

namespace {

bool write_text(const std::string& path, const std::string& content, std::string* err) {
    if (path.empty() || path == "-") {
        std::fputs(content.c_str(), stdout);
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.flush();
    if (!out) {
        *err = "cannot write " + path;
        return false;
    }
    return true;
}

SolverReport solve_with(MethodChoice method, double R) {
    switch (method) {
        case MethodChoice::w_plane: return solve_w_plane(R);
        case MethodChoice::z_plane: return solve_z_plane(R);
        default: return solve_classical(R);
    }
}

bool states_agree(const SolverReport& a, const SolverReport& b, double tol,
                  std::string* why) {
    if (a.physical.size() != b.physical.size()) {
        *why = std::string(method_name(a.method)) + " finds "
             + std::to_string(a.physical.size()) + " states, "
             + method_name(b.method) + " finds " + std::to_string(b.physical.size());
        return false;
    }
    for (std::size_t i = 0; i < a.physical.size(); ++i) {
        double dev = std::hypot(a.physical[i].u - b.physical[i].u,
                                a.physical[i].v - b.physical[i].v);
        if (dev > tol) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "%s and %s disagree at level %zu: (u,v) differ by %.3e "
                          "(tolerance %.3e)",
                          method_name(a.method), method_name(b.method), i, dev, tol);
            *why = buf;
            return false;
        }
    }
    return true;
}

void warn_marginal(const SolverReport& report) {
    if (report.marginal.empty()) return;
    std::fprintf(stderr,
                 "warning: %zu near-threshold solution(s) with u < 1e-10 R left out "
                 "of the state table\n",
                 report.marginal.size());
}

// Shortest representation that still parses back to the same double, for
// embedding R in filenames (data rows keep the fixed 17-digit form).
std::string compact_tag(double x) {
    for (int prec = 1; prec <= 17; ++prec) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) return buf;
    }
    return format_double(x);
}

std::string ray_file_tag(AxisRay ray) {
    switch (ray) {
        case AxisRay::pos_real: return "+x";
        case AxisRay::neg_real: return "-x";
        case AxisRay::pos_imag: return "+iy";
        default: return "-iy";
    }
}

} // namespace

double agreement_tolerance() {
    if (const char* env = std::getenv("FSW_SEED_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0) return v;
        std::fprintf(stderr, "warning: ignoring unparseable FSW_SEED_TOL=%s\n", env);
    }
    return 1e-9;
}

int cmd_solve(const RunConfig& config) {
    SolverReport report;
    WellParameters physical_well(1.0, 1.0, 1.0);
    bool have_well = false;
    try {
        double R = config.strength_value();
        if (config.physical_set) {
            physical_well = config.well();
            have_well = true;
        }
        if (config.method == MethodChoice::all) {
            SolverReport w = solve_w_plane(R);
            SolverReport z = solve_z_plane(R);
            SolverReport c = solve_classical(R);
            double tol = agreement_tolerance() * R;
            std::string why;
            if (!states_agree(w, z, tol, &why) || !states_agree(w, c, tol, &why)
                || !states_agree(z, c, tol, &why)) {
                std::fprintf(stderr, "method disagreement: %s\n", why.c_str());
                return 3;
            }
            report = std::move(w);
        } else {
            report = solve_with(config.method, R);
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    }

    warn_marginal(report);
    std::string text;
    if (config.format == OutputFormat::json) {
        text = report_json(report);
    } else {
        text = states_csv(report, have_well ? &physical_well : nullptr);
        if (config.all_crossings) text += "\n" + crossings_csv(report);
    }
    std::string err;
    if (!write_text(config.out_path, text, &err)) {
        std::fprintf(stderr, "%s\n", err.c_str());
        return 4;
    }
    return 0;
}

int cmd_figure(const RunConfig& config, const std::string& which,
               const std::optional<Window>& zoom) {
    double R = 0.0;
    std::vector<std::pair<std::string, std::string>> files;  // name -> content
    try {
        R = config.strength_value();
        const std::string rtag = compact_tag(R);

        if (which == "w_plane" || which == "w-plane") {
            SolverReport report = solve_w_plane(R);
            std::vector<Polyline> curves;
            Polyline circle;
            circle.closed = true;
            circle.label = "|w|=" + rtag;
            for (int j = 0; j < 2048; ++j)
                circle.points.push_back(std::polar(R, 2.0 * std::numbers::pi * j / 2048));
            curves.push_back(circle);
            files.emplace_back("circle_R" + rtag + ".csv", polyline_csv(circle));
            double r_max = 10.0 * R * std::exp(R);
            for (int k : report.branches)
                for (AxisRay ray : all_axis_rays) {
                    Polyline line = sample_branch_image(k, ray, r_max, 800);
                    files.emplace_back("wline_R" + rtag + "_k" + std::to_string(k)
                                           + "_" + ray_file_tag(ray) + ".csv",
                                       polyline_csv(line));
                    curves.push_back(std::move(line));
                }
            double half = 1.2 * R + 1.0;
            Window window = zoom.value_or(Window{-half, half, -half, half});
            files.emplace_back("wplane_R" + rtag + ".svg", render_svg(curves, window));
        } else if (which == "z_plane" || which == "z-plane") {
            int n = std::max(4096, (int)std::ceil(512.0 * R));
            Polyline curve = sample_circle_image(R, n);
            curve.label = "image of |w|=" + rtag;
            files.emplace_back("zcurve_R" + rtag + ".csv", polyline_csv(curve));

            double m = 0.0;
            for (Complex p : curve.points)
                m = std::max({m, std::abs(p.real()), std::abs(p.imag())});
            Polyline axis_x{{Complex(-1.1 * m, 0.0), Complex(1.1 * m, 0.0)}, false, "Re axis"};
            Polyline axis_y{{Complex(0.0, -1.1 * m), Complex(0.0, 1.1 * m)}, false, "Im axis"};
            files.emplace_back("axis_x_R" + rtag + ".csv", polyline_csv(axis_x));
            files.emplace_back("axis_y_R" + rtag + ".csv", polyline_csv(axis_y));

            std::vector<Polyline> curves{curve, axis_x, axis_y};
            if (zoom) {
                files.emplace_back("zplane_R" + rtag + "_zoom.svg",
                                   render_svg(curves, *zoom));
            } else {
                files.emplace_back("zplane_R" + rtag + ".svg", render_svg(curves));
                // zoom windows from crossing clusters on a log-|z| scale
                std::vector<double> radii;
                for (const auto& c : count_axis_crossings(curve)) {
                    Complex z = forward_map(std::polar(R, c.theta));
                    double r = std::abs(z);
                    if (r > 0.0) radii.push_back(r);
                }
                std::sort(radii.begin(), radii.end());
                std::vector<double> window_scales;
                for (std::size_t i = 0; i < radii.size(); ++i)
                    if (i == 0 || radii[i] > 5.0 * radii[i - 1])
                        window_scales.push_back(radii[i]);
                    else
                        window_scales.back() = radii[i];
                // the widest cluster is already the full view
                if (!window_scales.empty()) window_scales.pop_back();
                for (std::size_t i = 0; i < window_scales.size(); ++i) {
                    double half = 1.3 * window_scales[i];
                    files.emplace_back(
                        "zplane_R" + rtag + "_zoom" + std::to_string(i + 1) + ".svg",
                        render_svg(curves, Window{-half, half, -half, half}));
                }
            }
        } else {
            throw std::invalid_argument("unknown figure kind: " + which
                                        + " (expected w_plane or z_plane)");
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    }

    std::string dir = config.out_path.empty() ? "." : config.out_path;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);  // failures surface on write
    for (const auto& [name, content] : files) {
        std::string path = dir + "/" + name;
        std::string err;
        if (!write_text(path, content, &err)) {
            std::fprintf(stderr, "%s\n", err.c_str());
            return 4;
        }
        std::printf("%s\n", path.c_str());
    }
    return 0;
}

int cmd_sweep(const RunConfig& config, double R_min, double R_max, int steps) {
    SweepResult sweep;
    try {
        sweep = run_sweep(R_min, R_max, steps);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    }
    std::string text = config.format == OutputFormat::json ? sweep_json(sweep)
                                                           : sweep_csv(sweep);
    std::string err;
    if (!write_text(config.out_path, text, &err)) {
        std::fprintf(stderr, "%s\n", err.c_str());
        return 4;
    }
    return 0;
}

} // namespace fsw
