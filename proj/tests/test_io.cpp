#include <doctest.h>

#include "fsw/config.hpp"
#include "fsw/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace fsw;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

} // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("format_double round-trips exactly") {
    for (double x : {0.1, 1.0 / 3.0, 5e5, std::numbers::pi, 1e-300, -2.5e17, 0.0,
                     0.73908513321516064}) {
        std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_double(1.0) == "1");
}

TEST_CASE("name round trips") {
    for (Method m : {Method::w_plane, Method::z_plane, Method::classical})
        CHECK(method_from_name(method_name(m)) == m);
    CHECK(method_from_name("w_plane") == Method::w_plane);
    CHECK(method_from_name("z_plane") == Method::z_plane);
    CHECK_THROWS_AS(method_from_name("spectral"), std::invalid_argument);
    for (Axis a : {Axis::real_axis, Axis::imag_axis})
        CHECK(axis_from_name(axis_name(a)) == a);
    CHECK_THROWS_AS(axis_from_name("diagonal"), std::invalid_argument);
    for (Parity p : {Parity::even, Parity::odd})
        CHECK(parity_from_name(parity_name(p)) == p);
    CHECK_THROWS_AS(parity_from_name("mixed"), std::invalid_argument);
}

TEST_CASE("states table") {
    SolverReport rep = solve_classical(5.0);
    std::string csv = states_csv(rep);
    auto lines = lines_of(csv);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "n,parity,theta,u,v,energy");
    CHECK(lines[1].substr(0, 7) == "0,even,");
    CHECK(lines[2].substr(0, 6) == "1,odd,");

    // physical wells add SI and electron-volt energy columns
    WellParameters well(9.10938e-31, 5e-10, 1.60218e-19, 1.05457e-34);
    SolverReport phys = solve_classical(strength_parameter(well));
    std::string ext = states_csv(phys, &well);
    auto ext_lines = lines_of(ext);
    CHECK(ext_lines[0] == "n,parity,theta,u,v,energy,energy_J,energy_eV");
    REQUIRE(ext_lines.size() >= 2);
    // last two fields of a row differ by exactly the J <-> eV conversion
    std::istringstream row(ext_lines[1]);
    std::vector<std::string> cols;
    std::string col;
    while (std::getline(row, col, ',')) cols.push_back(col);
    REQUIRE(cols.size() == 8);
    double joules = std::strtod(cols[6].c_str(), nullptr);
    double ev = std::strtod(cols[7].c_str(), nullptr);
    CHECK(ev == doctest::Approx(joules / 1.602176634e-19).epsilon(1e-15));
    CHECK(joules < 1.60218e-19);  // bound states sit below the well depth
}

TEST_CASE("crossings table") {
    SolverReport rep = solve_z_plane(5.0);
    auto lines = lines_of(crossings_csv(rep));
    REQUIRE(lines.size() == 15);
    CHECK(lines[0] == "theta,axis,multiplicity,u,v,parity,energy");
    // row 1 is theta = 0 on the real axis: u = R, v = 0, odd label, E = R^2
    CHECK(lines[1] == "0,real,0,5,0,odd,25");
}

TEST_CASE("report json round trip is byte-identical") {
    SolverReport rep = solve_z_plane(2.0);
    std::string once = report_json(rep);
    SolverReport parsed = report_from_json(once);
    CHECK(parsed.R == rep.R);
    CHECK(parsed.method == rep.method);
    REQUIRE(parsed.all_crossings.size() == rep.all_crossings.size());
    for (std::size_t i = 0; i < parsed.all_crossings.size(); ++i) {
        CHECK(parsed.all_crossings[i].theta == rep.all_crossings[i].theta);
        CHECK(parsed.all_crossings[i].axis == rep.all_crossings[i].axis);
        CHECK(parsed.all_crossings[i].multiplicity_tag
              == rep.all_crossings[i].multiplicity_tag);
    }
    REQUIRE(parsed.physical.size() == rep.physical.size());
    for (std::size_t i = 0; i < parsed.physical.size(); ++i) {
        CHECK(parsed.physical[i].u == rep.physical[i].u);
        CHECK(parsed.physical[i].binding_energy == rep.physical[i].binding_energy);
        CHECK(parsed.physical[i].parity == rep.physical[i].parity);
    }
    CHECK(report_json(parsed) == once);
    CHECK_THROWS(report_from_json("{\"R\": 2.0}"));
}

TEST_CASE("polyline csv") {
    Polyline open;
    open.points = {Complex(1.0, 2.0), Complex(3.0, -4.0), Complex(0.5, 0.0)};
    auto lines = lines_of(polyline_csv(open));
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "re,im");
    CHECK(lines[1] == "1,2");
    CHECK(lines[2] == "3,-4");

    Polyline closed = open;
    closed.closed = true;
    auto closed_lines = lines_of(polyline_csv(closed));
    REQUIRE(closed_lines.size() == 5);
    CHECK(closed_lines.back() == closed_lines[1]);
}

TEST_CASE("sweep serialization") {
    SweepResult sweep = run_sweep(0.5, 2.5, 5);
    REQUIRE(sweep.R_grid.size() == 5);
    CHECK(sweep.state_counts == std::vector<int>{1, 1, 1, 2, 2});

    std::string csv = sweep_csv(sweep);
    auto lines = lines_of(csv);
    CHECK(lines[0] == "R,count,level,energy,dE_dR");
    std::size_t rows = 0;
    for (int c : sweep.state_counts) rows += (std::size_t)c;
    CHECK(lines.size() == rows + 1);
    CHECK(csv.find("nan") != std::string::npos);  // derivative edges

    std::string json = sweep_json(sweep);
    CHECK(json.find("\"R_grid\"") != std::string::npos);
    CHECK(json.find("null") != std::string::npos);
    CHECK(json.find("nan") == std::string::npos);
}

TEST_CASE("config keys") {
    RunConfig cfg;
    apply_config_key(cfg, "strength", "5.0");
    CHECK(cfg.strength_set);
    CHECK(cfg.strength == 5.0);
    CHECK(cfg.strength_value() == 5.0);

    apply_config_key(cfg, "method", "z-plane");
    CHECK(cfg.method == MethodChoice::z_plane);
    apply_config_key(cfg, "method", "all");
    CHECK(cfg.method == MethodChoice::all);
    apply_config_key(cfg, "format", "csv");
    CHECK(cfg.format == OutputFormat::csv);
    apply_config_key(cfg, "out", "results.csv");
    CHECK(cfg.out_path == "results.csv");
    for (const char* yes : {"true", "1", "yes"}) {
        apply_config_key(cfg, "all_crossings", yes);
        CHECK(cfg.all_crossings);
        apply_config_key(cfg, "all_crossings", "false");
        CHECK_FALSE(cfg.all_crossings);
    }

    CHECK_THROWS_AS(apply_config_key(cfg, "strenght", "5"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_key(cfg, "strength", "five"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_key(cfg, "all_crossings", "maybe"),
                    std::invalid_argument);
    CHECK_THROWS_AS(method_choice_from_name("spectral"), std::invalid_argument);
    CHECK_THROWS_AS(format_from_name("xml"), std::invalid_argument);
}

TEST_CASE("input modes are mutually exclusive") {
    RunConfig none;
    CHECK_THROWS_AS(none.strength_value(), std::invalid_argument);

    RunConfig both;
    apply_config_key(both, "strength", "5");
    apply_config_key(both, "mass", "1");
    apply_config_key(both, "half_width", "1");
    apply_config_key(both, "depth", "1");
    CHECK_THROWS_AS(both.strength_value(), std::invalid_argument);

    RunConfig zero;
    apply_config_key(zero, "strength", "0");
    CHECK_THROWS_AS(zero.strength_value(), std::invalid_argument);

    RunConfig phys;
    apply_config_key(phys, "mass", "9.10938e-31");
    apply_config_key(phys, "half_width", "5e-10");
    apply_config_key(phys, "depth", "1.60218e-19");
    apply_config_key(phys, "hbar", "1.05457e-34");
    CHECK(phys.strength_value() == doctest::Approx(2.56159019532796).epsilon(1e-12));
    CHECK_THROWS_AS(none.well(), std::invalid_argument);
}

TEST_CASE("config files") {
    const char* path = "fsw_test_config.tmp";
    {
        std::ofstream out(path);
        out << "# solver settings\n"
            << "\n"
            << "strength = 2.5\n"
            << "  format=csv  \n"
            << "all_crossings = yes\n";
    }
    RunConfig cfg;
    load_config_file(cfg, path);
    CHECK(cfg.strength_value() == 2.5);
    CHECK(cfg.format == OutputFormat::csv);
    CHECK(cfg.all_crossings);

    {
        std::ofstream out(path);
        out << "strength 2.5\n";
    }
    RunConfig bad;
    CHECK_THROWS_AS(load_config_file(bad, path), std::invalid_argument);
    std::remove(path);
    CHECK_THROWS_AS(load_config_file(bad, path), std::invalid_argument);
}

TEST_SUITE_END();
