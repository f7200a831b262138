#include "fsw/sweep.hpp"

#include "fsw/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fsw {

SweepResult run_sweep(double R_min, double R_max, int steps) {
    if (!(R_min > 0.0) || !(R_min < R_max))
        throw std::invalid_argument("sweep range must satisfy 0 < R_min < R_max");
    if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");

    SweepResult result;
    result.R_grid.reserve(steps);
    result.energies.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        double R = R_min + (R_max - R_min) * i / (steps - 1);
        SolverReport report = solve_classical(R);
        result.R_grid.push_back(R);
        result.state_counts.push_back((int)report.physical.size());
        std::vector<double> levels;
        levels.reserve(report.physical.size());
        for (const auto& s : report.physical) levels.push_back(s.binding_energy);
        result.energies.push_back(std::move(levels));
        if (i > 0 && result.state_counts[i] < result.state_counts[i - 1])
            throw std::runtime_error("state count decreased along the sweep");
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    result.dE_dR.resize(steps);
    for (int i = 0; i < steps; ++i) {
        result.dE_dR[i].assign(result.energies[i].size(), nan);
        if (i == 0 || i + 1 == steps) continue;
        for (std::size_t n = 0; n < result.energies[i].size(); ++n)
            if (n < result.energies[i - 1].size() && n < result.energies[i + 1].size())
                result.dE_dR[i][n] = (result.energies[i + 1][n] - result.energies[i - 1][n])
                                   / (result.R_grid[i + 1] - result.R_grid[i - 1]);
    }
    return result;
}

} // namespace fsw
