#include "fsw/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>

namespace {

struct FlagHolder {
    std::string config_path, method, format, out;
    double strength = 0.0, mass = 0.0, half_width = 0.0, depth = 0.0, hbar = 0.0;
    bool all_crossings = false;
    CLI::Option* o_strength = nullptr;
    CLI::Option* o_mass = nullptr;
    CLI::Option* o_half = nullptr;
    CLI::Option* o_depth = nullptr;
    CLI::Option* o_hbar = nullptr;
    CLI::Option* o_method = nullptr;
    CLI::Option* o_format = nullptr;
    CLI::Option* o_out = nullptr;
    CLI::Option* o_all = nullptr;
};

void add_io_flags(CLI::App* cmd, FlagHolder& h) {
    cmd->add_option("--config", h.config_path,
                    "key=value configuration file; command-line flags win");
    h.o_format = cmd->add_option("--format", h.format, "output format: json or csv");
    h.o_out = cmd->add_option("--out", h.out, "output path (default: stdout)");
}

void add_input_flags(CLI::App* cmd, FlagHolder& h) {
    h.o_strength = cmd->add_option("--strength", h.strength,
                                   "strength parameter R = L*sqrt(2 m V0)/hbar");
    h.o_mass = cmd->add_option("--mass", h.mass, "particle mass");
    h.o_half = cmd->add_option("--half-width", h.half_width, "well half-width L");
    h.o_depth = cmd->add_option("--depth", h.depth, "well depth V0");
    h.o_hbar = cmd->add_option("--hbar", h.hbar, "reduced Planck constant (default 1)");
}

fsw::RunConfig build_config(const FlagHolder& h) {
    fsw::RunConfig cfg;
    if (!h.config_path.empty()) fsw::load_config_file(cfg, h.config_path);
    if (h.o_strength && h.o_strength->count()) {
        cfg.strength = h.strength;
        cfg.strength_set = true;
    }
    auto physical = [&](CLI::Option* opt, double FlagHolder::* member, double fsw::RunConfig::* field) {
        if (opt && opt->count()) {
            cfg.*field = h.*member;
            cfg.physical_set = true;
        }
    };
    physical(h.o_mass, &FlagHolder::mass, &fsw::RunConfig::mass);
    physical(h.o_half, &FlagHolder::half_width, &fsw::RunConfig::half_width);
    physical(h.o_depth, &FlagHolder::depth, &fsw::RunConfig::depth);
    physical(h.o_hbar, &FlagHolder::hbar, &fsw::RunConfig::hbar);
    if (h.o_method && h.o_method->count())
        cfg.method = fsw::method_choice_from_name(h.method);
    if (h.o_format && h.o_format->count()) cfg.format = fsw::format_from_name(h.format);
    if (h.o_out && h.o_out->count()) cfg.out_path = h.out;
    if (h.o_all && h.o_all->count()) cfg.all_crossings = true;
    return cfg;
}

fsw::Window parse_window(const std::string& text) {
    fsw::Window w;
    char extra;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf:%lf%c", &w.xmin, &w.xmax, &w.ymin,
                    &w.ymax, &extra) != 4
        || !(w.xmin < w.xmax) || !(w.ymin < w.ymax))
        throw std::invalid_argument("zoom window must be xmin:xmax:ymin:ymax with "
                                    "xmin < xmax and ymin < ymax");
    return w;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound states of the finite square well via the Lambert W function"};
    app.require_subcommand(1);

    FlagHolder solve_flags, figure_flags, sweep_flags;

    CLI::App* solve = app.add_subcommand("solve", "compute bound states");
    add_input_flags(solve, solve_flags);
    add_io_flags(solve, solve_flags);
    solve_flags.o_method = solve->add_option(
        "--method", solve_flags.method, "w-plane, z-plane, classical, or all (default)");
    solve_flags.o_all = solve->add_flag("--all-crossings", solve_flags.all_crossings,
                                        "also list every axis crossing of the image curve");

    CLI::App* figure = app.add_subcommand("figure", "emit curve CSV data and SVG figures");
    add_input_flags(figure, figure_flags);
    add_io_flags(figure, figure_flags);
    std::string which, zoom_text;
    figure->add_option("--which", which, "w_plane or z_plane")->required();
    figure->add_option("--zoom", zoom_text, "explicit window xmin:xmax:ymin:ymax");

    CLI::App* sweep = app.add_subcommand("sweep", "scan a range of strength values");
    add_io_flags(sweep, sweep_flags);
    double R_min = 0.0, R_max = 0.0;
    int steps = 0;
    sweep->add_option("min", R_min, "lower end of the R range")->required();
    sweep->add_option("max", R_max, "upper end of the R range")->required();
    sweep->add_option("steps", steps, "number of grid points")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return fsw::cmd_solve(build_config(solve_flags));
        if (figure->parsed()) {
            fsw::RunConfig cfg = build_config(figure_flags);
            std::optional<fsw::Window> zoom;
            if (!zoom_text.empty()) zoom = parse_window(zoom_text);
            return fsw::cmd_figure(cfg, which, zoom);
        }
        if (sweep->parsed())
            return fsw::cmd_sweep(build_config(sweep_flags), R_min, R_max, steps);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
