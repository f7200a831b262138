#pragma once

#include "fsw/config.hpp"
#include "fsw/svg.hpp"

#include <optional>
#include <string>

namespace fsw {

// Exit codes shared by the commands:
//   0 success, 2 bad configuration or range, 3 method disagreement,
//   4 unwritable output.
int cmd_solve(const RunConfig& config);
int cmd_figure(const RunConfig& config, const std::string& which,
               const std::optional<Window>& zoom);
int cmd_sweep(const RunConfig& config, double R_min, double R_max, int steps);

// Pairwise tolerance for --method all, 1e-9 unless FSW_SEED_TOL overrides it.
double agreement_tolerance();

} // namespace fsw
