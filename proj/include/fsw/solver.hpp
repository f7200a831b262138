#pragma once

#include "fsw/well.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fsw {

enum class Axis { real_axis, imag_axis };

/// One of the four axial rays {gamma * r : r > 0} of the z-plane.
enum class AxisRay { pos_real, neg_real, pos_imag, neg_imag };

inline constexpr std::array<AxisRay, 4> all_axis_rays = {
    AxisRay::pos_real, AxisRay::neg_real, AxisRay::pos_imag, AxisRay::neg_imag};

/// The unit gamma in {1, -1, i, -i} of a ray.
Complex ray_gamma(AxisRay ray);

/// The axis a ray lies on.
Axis ray_axis(AxisRay ray);

AxisRay negate(AxisRay ray);
AxisRay conjugate(AxisRay ray);

/// A point where the image of the |w| = R circle under w e^w meets a
/// coordinate axis, expressed as the phase theta on the circle.
/// multiplicity_tag distinguishes crossings that share the same image point
/// but arrive on different trajectories (0, 1, ...).
struct PhaseSolution {
    double theta;
    Axis axis;
    int multiplicity_tag;
};

enum class Method { w_plane, z_plane, classical };

/// Thrown by solve_w_plane when the branch window misses crossings that the
/// circle-image axis count proves must exist.
struct BranchRangeTooSmall : std::runtime_error {
    BranchRangeTooSmall(int k_min, int k_max, int found, int expected);
};

struct SolverReport {
    double R = 0.0;
    Method method = Method::z_plane;
    std::vector<PhaseSolution> all_crossings;  // sorted by (theta, axis, tag)
    std::vector<double> residuals;             // |(u+iv)e^{iv} - gamma R| per crossing
    std::vector<BoundState> physical;          // theta in (0, pi/2), by increasing v
    std::vector<BoundState> marginal;          // u below 1e-10 R: numerically at threshold
    std::vector<int> branches;                 // w_plane only: branches that contributed
};

/// Approach B: scan g(theta) = R e^{i(theta + R sin theta)} over [0, 2pi) --
/// the reduced image of the circle, with the same axis crossings -- and
/// refine the zeros of Im g (real axis) and Re g (imag axis).
SolverReport solve_z_plane(double R);

/// Approach A: for every branch k in [k_min, k_max] and each axial ray,
/// find the r > 0 where |lambert_w(k, gamma r)| = R, i.e. where the branch
/// image of the ray meets the circle.  The default window
/// [-ceil(R/pi)-1, ceil(R/pi)+1] covers every branch the circle can reach.
SolverReport solve_w_plane(double R);
SolverReport solve_w_plane(double R, int k_min, int k_max);

/// Classical oracle: bisect v tan v = sqrt(R^2 - v^2) (even) and
/// v cot v = -sqrt(R^2 - v^2) (odd) on the subintervals of (0, R) delimited
/// by multiples of pi/2.
SolverReport solve_classical(double R);

/// gamma in {1, i, -1, -i} nearest in angle to g.
Complex nearest_axis_ray(Complex g);

/// |(u+iv)e^{iv} - gamma R| at u = R cos theta, v = R sin theta, with gamma
/// the nearest axial ray: how exactly the image point sits on an axis.
double master_residual(double R, double theta);

/// Keep crossings with theta strictly inside (0, pi/2) and map each to a
/// BoundState: (u, v) = (R cos theta, R sin theta), parity even for
/// imag-axis crossings and odd for real-axis ones, energy in natural units,
/// sorted by increasing v with level_index assigned.
std::vector<BoundState>
physical_filter(const std::vector<PhaseSolution>& crossings, double R);

/// Same, but crossings with u < 1e-10 R -- numerically at the continuum
/// threshold, where the exterior tail stops decaying -- are diverted into
/// marginal_out instead of the returned list.
std::vector<BoundState>
physical_filter(const std::vector<PhaseSolution>& crossings, double R,
                std::vector<BoundState>& marginal_out);

} // namespace fsw
