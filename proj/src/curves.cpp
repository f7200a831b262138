#include "fsw/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fsw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const char* ray_label(AxisRay ray) {
    switch (ray) {
        case AxisRay::pos_real: return "+x";
        case AxisRay::neg_real: return "-x";
        case AxisRay::pos_imag: return "+iy";
        default: return "-iy";
    }
}

// Angle between two tangent directions, folded to [0, pi].
double angle_between(Complex a, Complex b) {
    return std::abs(std::arg(a * std::conj(b)));
}

} // namespace

UndersampledCurve::UndersampledCurve(std::size_t segment)
    : std::runtime_error("polyline segment " + std::to_string(segment)
                         + " crosses both axes; sample the curve more densely") {}

DegenerateTangent::DegenerateTangent(double theta_star)
    : std::runtime_error("image-curve tangent vanishes at theta = "
                         + std::to_string(theta_star)) {}

Polyline sample_branch_image(int k, AxisRay ray, double r_max, int n) {
    if (!(r_max > 1e-12))
        throw std::invalid_argument("r_max must exceed the grid origin 1e-12");
    if (n < 2) throw std::invalid_argument("a polyline needs at least 2 points");
    Complex gamma = ray_gamma(ray);
    double t_lo = std::log(1e-12), t_hi = std::log(r_max);
    Polyline line;
    line.points.reserve(n);
    line.closed = false;
    line.label = "W(" + std::to_string(k) + "," + ray_label(ray) + ")";
    for (int j = 0; j < n; ++j) {
        double r = std::exp(t_lo + (t_hi - t_lo) * j / (n - 1));
        Complex w = lambert_w(k, gamma * r);
        if (line.points.empty() || line.points.back() != w) line.points.push_back(w);
    }
    if (line.points.size() < 2)
        throw std::invalid_argument("branch image degenerated to a single point");
    return line;
}

Polyline sample_circle_image(double R, int n) {
    if (!(R > 0.0)) throw std::invalid_argument("strength parameter must be positive");
    if (n < 64) throw std::invalid_argument("circle image needs at least 64 samples");
    Polyline line;
    line.points.reserve(n);
    line.closed = true;
    line.label = "|w|=" + std::to_string(R);
    for (int j = 0; j < n; ++j) {
        double theta = kTwoPi * j / n;
        line.points.push_back(forward_map(std::polar(R, theta)));
    }
    return line;
}

std::vector<PhaseSolution> count_axis_crossings(const Polyline& curve) {
    const auto& p = curve.points;
    const std::size_t n = p.size();
    if (n < 2) throw std::invalid_argument("a polyline needs at least 2 points");
    const std::size_t segments = curve.closed ? n : n - 1;
    const double param_scale = curve.closed ? kTwoPi / (double)n : 1.0 / (double)segments;

    struct Hit {
        double theta;
        Axis axis;
        Complex where;
    };
    std::vector<Hit> hits;

    auto component = [](Complex z, Axis axis) {
        return axis == Axis::real_axis ? z.imag() : z.real();
    };
    for (Axis axis : {Axis::real_axis, Axis::imag_axis}) {
        // a zero sample is a crossing only if the curve actually leaves the
        // axis around it; a polyline lying in the axis contributes nothing
        auto nonzero_neighbour = [&](std::size_t j, std::ptrdiff_t step) {
            for (std::size_t hops = 1; hops < n; ++hops) {
                std::ptrdiff_t i = (std::ptrdiff_t)j + step * (std::ptrdiff_t)hops;
                if (curve.closed)
                    i = ((i % (std::ptrdiff_t)n) + (std::ptrdiff_t)n) % (std::ptrdiff_t)n;
                else if (i < 0 || i >= (std::ptrdiff_t)n)
                    return 0.0;
                double f = component(p[(std::size_t)i], axis);
                if (f != 0.0) return f;
            }
            return 0.0;
        };
        for (std::size_t j = 0; j < n; ++j) {
            if (component(p[j], axis) != 0.0) continue;
            if (nonzero_neighbour(j, -1) == 0.0 && nonzero_neighbour(j, +1) == 0.0)
                continue;
            hits.push_back({(double)j * param_scale, axis, p[j]});
        }
    }
    for (std::size_t j = 0; j < segments; ++j) {
        Complex a = p[j], b = p[(j + 1) % n];
        int crossed = 0;
        for (Axis axis : {Axis::real_axis, Axis::imag_axis}) {
            double fa = component(a, axis), fb = component(b, axis);
            if (fa == 0.0 || fb == 0.0) continue;
            if ((fa < 0.0) == (fb < 0.0)) continue;
            ++crossed;
            double frac = fa / (fa - fb);  // exact root of the linear interpolant
            hits.push_back({((double)j + frac) * param_scale, axis, a + frac * (b - a)});
        }
        if (crossed > 1) throw UndersampledCurve(j);
    }

    std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) {
        if (x.theta != y.theta) return x.theta < y.theta;
        return x.axis < y.axis;
    });
    // drop re-detections of one crossing (exact sample zero + neighbours)
    std::vector<Hit> ded;
    for (const auto& h : hits) {
        bool dup = false;
        for (const auto& d : ded)
            if (d.axis == h.axis && std::abs(d.theta - h.theta) <= 1e-9) dup = true;
        if (!dup) ded.push_back(h);
    }

    // crossings sharing a location on the same axis are one multiple point
    std::vector<int> group(ded.size(), -1);
    int n_groups = 0;
    for (std::size_t i = 0; i < ded.size(); ++i) {
        if (group[i] >= 0) continue;
        group[i] = n_groups++;
        for (std::size_t j = i + 1; j < ded.size(); ++j)
            if (group[j] < 0 && ded[j].axis == ded[i].axis
                && std::abs(ded[j].where - ded[i].where)
                       <= 1e-6 * std::max(1.0, std::abs(ded[i].where)))
                group[j] = group[i];
    }
    std::vector<int> next_tag(n_groups, 0);
    std::vector<PhaseSolution> out;
    out.reserve(ded.size());
    for (std::size_t i = 0; i < ded.size(); ++i)
        out.push_back({ded[i].theta, ded[i].axis, next_tag[group[i]]++});
    return out;
}

AngleCheck conformal_angle_check(double R, const PhaseSolution& sol, int k) {
    if (!(R > 0.0)) throw std::invalid_argument("strength parameter must be positive");
    const double h = 1e-7;
    Complex w_star = std::polar(R, sol.theta);

    // dz/dtheta = i w (1 + w) e^w vanishes where the map is singular
    Complex dz = Complex(0, 1) * w_star * (1.0 + w_star) * std::exp(w_star);
    if (std::abs(dz) < 1e-12) throw DegenerateTangent(sol.theta);

    Complex z_star = forward_map(w_star);
    Complex gamma = nearest_axis_ray(z_star);
    double t_star = std::log(std::abs(z_star));

    // w-plane: circle tangent against the branch-image tangent, both taken
    // with increasing parameter (theta on the circle, log r on the ray)
    Complex circle_tangent = Complex(0, 1) * w_star;
    Complex line_tangent = (lambert_w(k, gamma * std::exp(t_star + h))
                            - lambert_w(k, gamma * std::exp(t_star - h))) / (2.0 * h);

    // z-plane: image-curve tangent against the axis direction
    Complex curve_tangent = (forward_map(std::polar(R, sol.theta + h))
                             - forward_map(std::polar(R, sol.theta - h))) / (2.0 * h);

    AngleCheck check;
    check.theta_star = sol.theta;
    check.w_plane_angle = angle_between(circle_tangent, line_tangent);
    check.z_plane_angle = angle_between(curve_tangent, gamma);
    return check;
}

} // namespace fsw
