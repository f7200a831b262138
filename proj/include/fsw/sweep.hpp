#pragma once

#include <vector>

namespace fsw {

// Spectrum of the well along a grid of strength values.  energies[i] holds
// the bound-state energies at R_grid[i] (increasing level index); dE_dR is
// the per-level central-difference sensitivity on the same grid, NaN at the
// grid edges and wherever a level does not exist on both neighbours.
struct SweepResult {
    std::vector<double> R_grid;
    std::vector<int> state_counts;
    std::vector<std::vector<double>> energies;
    std::vector<std::vector<double>> dE_dR;
};

// Solve the well on `steps` uniformly spaced R values in [R_min, R_max].
// Requires 0 < R_min < R_max and steps >= 2; verifies that the state count
// never decreases along the grid.
SweepResult run_sweep(double R_min, double R_max, int steps);

} // namespace fsw
