#include "fsw/solver.hpp"

#include "fsw/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace fsw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate_strength(double R) {
    if (!(R > 0.0) || !std::isfinite(R))
        throw std::invalid_argument("strength parameter must be positive");
}

// A crossing before multiplicity tagging; count == 2 marks a tangential
// double found as one degenerate root.
struct Record {
    double theta;
    Axis axis;
    int count;
    std::vector<int> branches;
};

double wrap_theta(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (kTwoPi - t <= 1e-9) t = 0.0;
    return t;
}

bool record_order(const Record& a, const Record& b) {
    if (a.axis != b.axis) return a.axis < b.axis;
    return a.theta < b.theta;
}

// Merge records of the same axis within 1e-9 in theta.  Coincident records
// from different scans describe one crossing point, so counts do not add;
// a tangential double (count 2) survives as 2.
std::vector<Record> dedup_records(std::vector<Record> recs) {
    std::sort(recs.begin(), recs.end(), record_order);
    std::vector<Record> out;
    for (auto& r : recs) {
        if (!out.empty() && out.back().axis == r.axis
            && std::abs(out.back().theta - r.theta) <= 1e-9) {
            Record& prev = out.back();
            prev.count = std::max(prev.count, r.count);
            for (int k : r.branches)
                if (std::find(prev.branches.begin(), prev.branches.end(), k)
                    == prev.branches.end())
                    prev.branches.push_back(k);
        } else {
            out.push_back(std::move(r));
        }
    }
    return out;
}

int total_count(const std::vector<Record>& recs) {
    int n = 0;
    for (const auto& r : recs) n += r.count;
    return n;
}

// Generic 1-D crossing scan: exact grid zeros, bracketed sign changes, and
// tangential near-misses (local |f| dips that stay one-signed get a
// golden-section look; a dip proven to cross twice yields two roots, a dip
// bottoming out within fmin_tol of zero yields one double-counted root).
template <class F, class DF, class Emit>
void scan_for_roots(const std::vector<double>& xs, const F& f, const DF& df,
                    double dip_threshold, double fmin_tol, const Emit& emit) {
    const int n = (int)xs.size();
    std::vector<double> fs(n);
    for (int j = 0; j < n; ++j) fs[j] = f(xs[j]);

    for (int j = 0; j < n; ++j)
        if (fs[j] == 0.0) emit(xs[j], 1);

    for (int j = 0; j + 1 < n; ++j) {
        if (fs[j] == 0.0 || fs[j + 1] == 0.0) continue;
        if ((fs[j] < 0.0) != (fs[j + 1] < 0.0))
            emit(refine_root(f, df, xs[j], xs[j + 1]), 1);
    }

    for (int j = 1; j + 1 < n; ++j) {
        if (fs[j - 1] == 0.0 || fs[j] == 0.0 || fs[j + 1] == 0.0) continue;
        bool same_sign = (fs[j - 1] < 0.0) == (fs[j] < 0.0)
                      && (fs[j] < 0.0) == (fs[j + 1] < 0.0);
        if (!same_sign) continue;
        if (std::abs(fs[j]) > std::abs(fs[j - 1]) || std::abs(fs[j]) > std::abs(fs[j + 1]))
            continue;
        if (std::abs(fs[j]) > dip_threshold) continue;
        double s = fs[j] < 0.0 ? -1.0 : 1.0;
        double a = xs[j - 1], b = xs[j + 1];
        double xmin = minimize([&](double x) { return s * f(x); }, a, b, 1e-13);
        double fmin = s * f(xmin);
        if (fmin < 0.0) {
            // the dip crosses between samples: two simple roots
            emit(refine_root(f, df, a, xmin), 1);
            emit(refine_root(f, df, xmin, b), 1);
        } else if (fmin <= fmin_tol) {
            // genuine tangency -- but an argmin pinned to the window edge is
            // just the slope toward a root outside, not a tangency
            double margin = 0.05 * (b - a);
            if (xmin > a + margin && xmin < b - margin) emit(xmin, 2);
        }
    }
}

// ----- z-plane (Approach B) ----------------------------------------------

int z_sample_count(double R) {
    return std::max(4096, (int)std::ceil(512.0 * R));
}

// Crossings of the reduced circle image g(theta) = e^{i(theta + R sin theta)}
// with one axis: zeros of Im g give real-axis crossings, zeros of Re g
// imag-axis ones.
void scan_circle_component(double R, bool imag_component, std::vector<Record>& out) {
    auto f = [&](double th) {
        double p = th + R * std::sin(th);
        return imag_component ? std::sin(p) : std::cos(p);
    };
    auto df = [&](double th) {
        double p = th + R * std::sin(th);
        double dp = 1.0 + R * std::cos(th);
        return (imag_component ? std::cos(p) : -std::sin(p)) * dp;
    };
    Axis axis = imag_component ? Axis::real_axis : Axis::imag_axis;
    int N = z_sample_count(R);
    std::vector<double> xs(N + 1);
    for (int j = 0; j <= N; ++j) xs[j] = kTwoPi * j / N;
    scan_for_roots(xs, f, df, 0.05, 1e-9, [&](double th, int count) {
        th = wrap_theta(th);
        out.push_back({th, axis, count, {}});
    });
}

std::vector<Record> z_plane_records(double R) {
    std::vector<Record> recs;
    scan_circle_component(R, true, recs);
    scan_circle_component(R, false, recs);
    return dedup_records(std::move(recs));
}

// ----- w-plane (Approach A) ----------------------------------------------

void scan_branch_ray(double R, int k, AxisRay ray, double t_lo, double t_hi,
                     int nt, std::vector<Record>& out) {
    Complex gamma = ray_gamma(ray);
    auto value = [&](double t) { return lambert_w(k, gamma * std::exp(t)); };
    auto h = [&](double t) { return std::abs(value(t)) - R; };
    auto dh = [&](double t) {
        Complex w = value(t);
        Complex wp1 = w + 1.0;
        if (std::abs(wp1) < 1e-9) return std::numeric_limits<double>::quiet_NaN();
        return (std::conj(w) * (w / wp1)).real() / std::abs(w);
    };

    std::vector<double> xs;
    xs.reserve(nt + 2);
    for (int j = 0; j <= nt; ++j) xs.push_back(t_lo + (t_hi - t_lo) * j / nt);
    if (ray == AxisRay::neg_real && t_lo < -1.0 && -1.0 < t_hi) {
        // |W| is V-shaped across the branch point r = 1/e; pin that sample
        auto pos = std::lower_bound(xs.begin(), xs.end(), -1.0);
        if (*pos != -1.0) xs.insert(pos, -1.0);
    }

    double tol = std::max(1.0, R);
    scan_for_roots(xs, h, dh, 0.05 * tol, 1e-9 * tol, [&](double t, int count) {
        Complex w = value(t);
        double th = std::atan2(w.imag(), w.real());
        if (th < 0.0) th += kTwoPi;
        out.push_back({wrap_theta(th), ray_axis(ray), count, {k}});
    });
}

// ----- shared assembly ----------------------------------------------------

BoundState make_state(double R, double theta, Axis axis) {
    BoundState s;
    s.level_index = -1;
    s.parity = axis == Axis::imag_axis ? Parity::even : Parity::odd;
    s.u = R * std::cos(theta);
    s.v = R * std::sin(theta);
    s.theta = theta;
    s.binding_energy = energy_from_u(natural_well(R), std::max(s.u, 0.0));
    return s;
}

std::vector<BoundState> filter_states(const std::vector<PhaseSolution>& crossings,
                                      double R, std::vector<BoundState>* marginal_out) {
    std::vector<BoundState> physical;
    for (const auto& c : crossings) {
        if (!(c.theta > 1e-12) || !(c.theta < kPi / 2.0 + 1e-10)) continue;
        double u = R * std::cos(c.theta);
        if (u < 1e-10 * R) {
            if (marginal_out) {
                BoundState s = make_state(R, c.theta, c.axis);
                s.u = std::max(u, 0.0);
                marginal_out->push_back(s);
            }
            continue;
        }
        if (c.theta >= kPi / 2.0) continue;
        physical.push_back(make_state(R, c.theta, c.axis));
    }
    std::sort(physical.begin(), physical.end(),
              [](const BoundState& a, const BoundState& b) { return a.v < b.v; });
    for (size_t i = 0; i < physical.size(); ++i) physical[i].level_index = (int)i;
    return physical;
}

SolverReport assemble(double R, Method method, std::vector<Record> recs,
                      std::vector<int> branches) {
    recs = dedup_records(std::move(recs));

    // Group crossings that share an image point: a real-axis crossing at
    // theta coincides with its mirror at 2pi - theta (conjugate parameter,
    // same real z), and a tangential double is one record with count 2.
    std::vector<size_t> order(recs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (recs[a].theta != recs[b].theta) return recs[a].theta < recs[b].theta;
        return recs[a].axis < recs[b].axis;
    });
    std::vector<int> group(recs.size(), -1);
    int n_groups = 0;
    for (size_t i : order)
        if (group[i] < 0) {
            group[i] = n_groups++;
            if (recs[i].axis == Axis::real_axis) {
                double mirror = kTwoPi - recs[i].theta;
                for (size_t j : order)
                    if (j != i && group[j] < 0 && recs[j].axis == Axis::real_axis
                        && std::abs(recs[j].theta - mirror) <= 1e-9)
                        group[j] = group[i];
            }
        }

    SolverReport report;
    report.R = R;
    report.method = method;
    report.branches = std::move(branches);
    std::vector<int> next_tag(n_groups, 0);
    for (size_t i : order)
        for (int c = 0; c < recs[i].count; ++c) {
            report.all_crossings.push_back({recs[i].theta, recs[i].axis,
                                            next_tag[group[i]]++});
            report.residuals.push_back(master_residual(R, recs[i].theta));
        }
    report.physical = filter_states(report.all_crossings, R, &report.marginal);
    return report;
}

} // namespace

Complex ray_gamma(AxisRay ray) {
    switch (ray) {
        case AxisRay::pos_real: return {1.0, 0.0};
        case AxisRay::neg_real: return {-1.0, 0.0};
        case AxisRay::pos_imag: return {0.0, 1.0};
        default: return {0.0, -1.0};
    }
}

Axis ray_axis(AxisRay ray) {
    return ray == AxisRay::pos_real || ray == AxisRay::neg_real ? Axis::real_axis
                                                                : Axis::imag_axis;
}

AxisRay negate(AxisRay ray) {
    switch (ray) {
        case AxisRay::pos_real: return AxisRay::neg_real;
        case AxisRay::neg_real: return AxisRay::pos_real;
        case AxisRay::pos_imag: return AxisRay::neg_imag;
        default: return AxisRay::pos_imag;
    }
}

AxisRay conjugate(AxisRay ray) {
    switch (ray) {
        case AxisRay::pos_imag: return AxisRay::neg_imag;
        case AxisRay::neg_imag: return AxisRay::pos_imag;
        default: return ray;
    }
}

BranchRangeTooSmall::BranchRangeTooSmall(int k_min, int k_max, int found, int expected)
    : std::runtime_error("branch window [" + std::to_string(k_min) + ", "
                         + std::to_string(k_max) + "] yields " + std::to_string(found)
                         + " axis crossings, but the circle image has "
                         + std::to_string(expected)) {}

Complex nearest_axis_ray(Complex g) {
    if (std::abs(g.real()) >= std::abs(g.imag()))
        return {g.real() >= 0.0 ? 1.0 : -1.0, 0.0};
    return {0.0, g.imag() >= 0.0 ? 1.0 : -1.0};
}

double master_residual(double R, double theta) {
    double u = R * std::cos(theta);
    double v = R * std::sin(theta);
    Complex g = Complex(u, v) * std::exp(Complex(0.0, v));
    return std::abs(g - nearest_axis_ray(g) * R);
}

std::vector<BoundState>
physical_filter(const std::vector<PhaseSolution>& crossings, double R) {
    validate_strength(R);
    return filter_states(crossings, R, nullptr);
}

std::vector<BoundState>
physical_filter(const std::vector<PhaseSolution>& crossings, double R,
                std::vector<BoundState>& marginal_out) {
    validate_strength(R);
    return filter_states(crossings, R, &marginal_out);
}

SolverReport solve_z_plane(double R) {
    validate_strength(R);
    return assemble(R, Method::z_plane, z_plane_records(R), {});
}

SolverReport solve_w_plane(double R) {
    int k = (int)std::ceil(R / kPi) + 1;
    return solve_w_plane(R, -k, k);
}

SolverReport solve_w_plane(double R, int k_min, int k_max) {
    validate_strength(R);
    if (k_min > k_max) throw std::invalid_argument("branch window is empty");

    std::vector<Record> z_recs = z_plane_records(R);

    // r small enough that every branch magnitude |W_k| ~ log(1/r) already
    // exceeds R, r large enough to pass the farthest circle-image point Re^R.
    double t_lo = std::min(std::log(1e-12), std::log(R) - R - std::log(1e3));
    double t_hi = std::log(10.0 * R) + R;
    int nt = std::clamp((int)std::ceil((t_hi - t_lo) * 64.0), 256, 400000);

    std::vector<Record> recs;
    for (int k = k_min; k <= k_max; ++k)
        for (AxisRay ray : all_axis_rays)
            scan_branch_ray(R, k, ray, t_lo, t_hi, nt, recs);
    recs = dedup_records(std::move(recs));

    int found = total_count(recs);
    int expected = total_count(z_recs);
    if (found != expected) throw BranchRangeTooSmall(k_min, k_max, found, expected);

    std::vector<int> branches;
    for (const auto& r : recs)
        for (int k : r.branches)
            if (std::find(branches.begin(), branches.end(), k) == branches.end())
                branches.push_back(k);
    std::sort(branches.begin(), branches.end());

    return assemble(R, Method::w_plane, std::move(recs), std::move(branches));
}

SolverReport solve_classical(double R) {
    validate_strength(R);
    std::vector<Record> recs;
    for (int m = 0;; ++m) {
        double a = m * kPi / 2.0;
        if (a >= R) break;
        double b = std::min(a + kPi / 2.0, R);
        if (b - a <= 1e-12) continue;
        bool even = m % 2 == 0;
        auto f = [&](double v) {
            double u = std::sqrt((R - v) * (R + v));
            return even ? v * std::tan(v) - u
                        : v * (std::cos(v) / std::sin(v)) + u;
        };
        auto df = [&](double v) {
            double u = std::sqrt((R - v) * (R + v));
            double du = u > 0.0 ? v / u : std::numeric_limits<double>::infinity();
            if (even) {
                double c = std::cos(v);
                return std::tan(v) + v / (c * c) + du;
            }
            double s = std::sin(v);
            return std::cos(v) / s - v / (s * s) - du;
        };
        double hi = b < R ? b - 1e-9 : b;  // back off the tan/cot pole only
        if (hi <= a) continue;
        double fa = f(a), fh = f(hi);
        if (fa == 0.0 || fh == 0.0 || (fa < 0.0) != (fh < 0.0)) {
            double v = refine_root(f, df, a, hi);
            double u = std::sqrt((R - v) * (R + v));
            double theta = std::atan2(v, u);
            recs.push_back({theta, even ? Axis::imag_axis : Axis::real_axis, 1, {}});
        }
    }
    return assemble(R, Method::classical, std::move(recs), {});
}

} // namespace fsw
