#include "fsw/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace fsw {

namespace {

double parse_number(const std::string& key, const std::string& value) {
    char* end = nullptr;
    double x = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        throw std::invalid_argument("config key '" + key + "' needs a number, got '"
                                    + value + "'");
    return x;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw std::invalid_argument("config key '" + key + "' needs a boolean, got '"
                                + value + "'");
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

} // namespace

double RunConfig::strength_value() const {
    if (strength_set == physical_set)
        throw std::invalid_argument(
            "exactly one input mode is required: --strength, or the physical "
            "constants --mass --half-width --depth");
    if (strength_set) {
        if (!(strength > 0.0))
            throw std::invalid_argument("strength parameter must be positive");
        return strength;
    }
    return strength_parameter(well());
}

WellParameters RunConfig::well() const {
    if (!physical_set)
        throw std::invalid_argument("physical well constants were not provided");
    return WellParameters(mass, half_width, depth, hbar);
}

MethodChoice method_choice_from_name(const std::string& name) {
    if (name == "w-plane" || name == "w_plane") return MethodChoice::w_plane;
    if (name == "z-plane" || name == "z_plane") return MethodChoice::z_plane;
    if (name == "classical") return MethodChoice::classical;
    if (name == "all") return MethodChoice::all;
    throw std::invalid_argument("unknown method: " + name);
}

OutputFormat format_from_name(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown format: " + name);
}

void apply_config_key(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "strength") {
        config.strength = parse_number(key, value);
        config.strength_set = true;
    } else if (key == "mass") {
        config.mass = parse_number(key, value);
        config.physical_set = true;
    } else if (key == "half_width") {
        config.half_width = parse_number(key, value);
        config.physical_set = true;
    } else if (key == "depth") {
        config.depth = parse_number(key, value);
        config.physical_set = true;
    } else if (key == "hbar") {
        config.hbar = parse_number(key, value);
        config.physical_set = true;
    } else if (key == "method") {
        config.method = method_choice_from_name(value);
    } else if (key == "format") {
        config.format = format_from_name(value);
    } else if (key == "out") {
        config.out_path = value;
    } else if (key == "all_crossings") {
        config.all_crossings = parse_bool(key, value);
    } else {
        throw std::invalid_argument("unknown config key: " + key);
    }
}

void load_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno)
                                        + ": expected key=value");
        apply_config_key(config, trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
    }
}

} // namespace fsw
