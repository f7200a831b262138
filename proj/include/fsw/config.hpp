#pragma once

#include "fsw/well.hpp"

#include <string>

namespace fsw {

enum class MethodChoice { w_plane, z_plane, classical, all };
enum class OutputFormat { json, csv };

// One run's worth of settings.  Input is either a strength parameter R
// directly or physical well constants that derive one; exactly one of the
// two modes may be active.
struct RunConfig {
    bool strength_set = false;
    double strength = 0.0;

    bool physical_set = false;
    double mass = 0.0;
    double half_width = 0.0;
    double depth = 0.0;
    double hbar = 1.0;

    MethodChoice method = MethodChoice::all;
    OutputFormat format = OutputFormat::json;
    bool all_crossings = false;
    std::string out_path;  // empty: stdout (solve/sweep) or cwd (figure)

    // Validates the mode invariant and returns R (derived in physical mode).
    double strength_value() const;
    WellParameters well() const;  // physical mode only
};

MethodChoice method_choice_from_name(const std::string& name);
OutputFormat format_from_name(const std::string& name);

// Flat key=value file (# comments, blank lines ignored).  Recognized keys:
// strength, mass, half_width, depth, hbar, method, format, out,
// all_crossings.  Unknown keys are errors.
void load_config_file(RunConfig& config, const std::string& path);
void apply_config_key(RunConfig& config, const std::string& key, const std::string& value);

} // namespace fsw
