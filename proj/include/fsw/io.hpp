#pragma once

#include "fsw/curves.hpp"
#include "fsw/sweep.hpp"

#include <string>

namespace fsw {

// 17 significant digits: enough to reproduce any double exactly.
std::string format_double(double x);

const char* method_name(Method m);    // "w-plane" / "z-plane" / "classical"
const char* axis_name(Axis a);        // "real" / "imag"
const char* parity_name(Parity p);    // "even" / "odd"

Method method_from_name(const std::string& name);
Axis axis_from_name(const std::string& name);
Parity parity_from_name(const std::string& name);

// Bound-state table: n,parity,theta,u,v,energy — plus energy_J,energy_eV
// columns when a physical well is supplied.
std::string states_csv(const SolverReport& report, const WellParameters* well = nullptr);

// Full crossing table: theta,axis,multiplicity,u,v,parity,energy.
std::string crossings_csv(const SolverReport& report);

// {R, method, crossings:[{theta,axis,mult}], states:[{n,parity,u,v,theta,E}],
// residual_max} — and the inverse.  The JSON schema keeps residual_max only,
// so a parsed report carries that single residual; serializing it again
// reproduces the input byte for byte.
std::string report_json(const SolverReport& report);
SolverReport report_from_json(const std::string& text);

// re,im rows; a closed polyline repeats its first point at the end.
std::string polyline_csv(const Polyline& line);

std::string sweep_csv(const SweepResult& sweep);
std::string sweep_json(const SweepResult& sweep);

} // namespace fsw
