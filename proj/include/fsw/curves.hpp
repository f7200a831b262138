#pragma once

#include "fsw/solver.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fsw {

// A sampled curve in the complex plane.  closed == true means the segment
// from points.back() to points.front() is part of the curve.
struct Polyline {
    std::vector<Complex> points;
    bool closed = false;
    std::string label;
};

// Paired angle measurement at a solution point theta_star: the angle between
// the circle |w| = R and the branch image line in the w-plane, and the angle
// between the image curve and the crossed axis in the z-plane.  A conformal
// map makes them equal.
struct AngleCheck {
    double theta_star;
    double w_plane_angle;   // radians, in [0, pi]
    double z_plane_angle;   // radians, in [0, pi]
};

// A polyline segment crossed more than one axis, so the sampling cannot
// resolve the crossing order.
struct UndersampledCurve : std::runtime_error {
    explicit UndersampledCurve(std::size_t segment);
};

// The image-curve tangent vanishes at the requested point (the map is
// singular at w = -1), so no angle can be measured there.
struct DegenerateTangent : std::runtime_error {
    explicit DegenerateTangent(double theta_star);
};

// Image of the axial ray {gamma * r : r in [1e-12, r_max]} under branch k,
// sampled on a log-spaced grid of n points.
Polyline sample_branch_image(int k, AxisRay ray, double r_max, int n);

// Image of the circle |w| = R under w e^w, sampled on a uniform angle grid
// of n points (n >= 64); returned closed.
Polyline sample_circle_image(double R, int n);

// Axis crossings of a polyline, located by sign changes of Im (real axis)
// and Re (imag axis) along segments and refined on the linear interpolant.
// theta is the curve parameter: for closed curves the arc parameter scaled
// to [0, 2pi), so a circle image sampled uniformly reports true angles; for
// open curves the parameter normalized to [0, 1].  Crossings landing on the
// same point of the same axis share a location and get distinct
// multiplicity tags, ordered by theta.  Throws UndersampledCurve if one
// segment crosses both axes.
std::vector<PhaseSolution> count_axis_crossings(const Polyline& curve);

// Angle comparison at the solution sol of strength R, on branch k (the
// branch whose image line passes through w* = R e^{i theta}).  Tangents are
// central finite differences with step 1e-7 in the curve parameter.
// Throws DegenerateTangent when the image-curve tangent magnitude falls
// below 1e-12.
AngleCheck conformal_angle_check(double R, const PhaseSolution& sol, int k);

} // namespace fsw
