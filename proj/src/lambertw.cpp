#include "fsw/lambertw.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace fsw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
constexpr double kOmega = 0.56714329040978387;  // lambert_w(0, 1)

std::string fmt_complex(Complex z) {
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

// Truncated expansion about the branch point w = -1, z = -1/e, in powers of
// p = +-sqrt(2 (e z + 1)).  Seed quality only; the iteration finishes the job.
Complex branch_point_series(Complex p) {
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0
         + p * (-43.0 / 540.0 + p * (769.0 / 17280.0 - p * (221.0 / 8505.0))))));
}

Complex log_branch_seed(int k, Complex z) {
    Complex l1 = std::log(z) + Complex(0.0, 2.0 * kPi * k);
    if (std::abs(l1) < 0.5) return l1;  // only possible for k == 0 near z == 1
    return l1 - std::log(l1);
}

// Point of the separating curve between regions 0 and 1 at height eta.
Complex curve_point(double eta) {
    return Complex(-eta * std::cos(eta) / std::sin(eta), eta);
}

Complex primary_seed(int k, Complex z) {
    const double r = std::abs(z);
    const bool near_cut = z.real() < 0.0 && z.imag() <= 0.3 * (-z.real());
    if (k == 0) {
        Complex ez1 = kE * z + 1.0;
        if (std::abs(ez1) <= 0.45) return branch_point_series(std::sqrt(2.0 * ez1));
        if (near_cut && r >= 0.42) return curve_point(detail::curve_eta_for_magnitude(r));
        if (r <= 1.0) return z / (1.0 + z);  // (1,1) Pade at the origin
        Complex l1 = std::log(z);
        if (std::abs(l1) <= 1.5) return kOmega + (z - 1.0) * (kOmega / (1.0 + kOmega));
        return l1 - std::log(l1);
    }
    if (k == -1) {
        Complex ez1 = kE * z + 1.0;
        if (std::abs(ez1) <= 0.45) return branch_point_series(-std::sqrt(2.0 * ez1));
        if (near_cut) {
            if (r <= 0.3) {
                double l1 = std::log(r);  // < -1 here
                double l2 = std::log(-l1);
                return Complex(l1 - l2 + l2 / l1, 0.0);
            }
            if (r >= 0.42) return std::conj(curve_point(detail::curve_eta_for_magnitude(r)));
        }
    }
    return log_branch_seed(k, z);
}

struct IterationResult {
    Complex w;
    double residual;
};

// Halley refinement of w e^w = z with step damping and best-iterate tracking.
// The stop target scales with |z|: the achievable floor of |w e^w - z| is a
// few ulps of |z|, and stopping there keeps w accurate even for tiny |z|
// where the inverse map is steep.
IterationResult refine(Complex w, Complex z) {
    const double target = 1e-13 * std::abs(z);
    Complex best_w = w;
    double best_res = std::numeric_limits<double>::infinity();
    int stalled = 0;
    for (int it = 0; it < 64; ++it) {
        Complex e = std::exp(w);
        Complex f = w * e - z;
        double res = std::abs(f);
        if (res < best_res) {
            best_res = res;
            best_w = w;
            stalled = 0;
        } else if (++stalled >= 3) {
            break;
        }
        if (res <= target) break;
        Complex fp = e * (w + 1.0);
        Complex denom = std::abs(w + 1.0) < 1e-12
                            ? fp  // next to the double root plain Newton is safer
                            : fp - f * (w + 2.0) / (2.0 * (w + 1.0));
        if (denom == Complex(0.0, 0.0)) break;
        Complex dw = f / denom;
        double adw = std::abs(dw);
        if (!std::isfinite(adw)) break;
        double cap = 0.5 * (1.0 + std::abs(w));
        if (adw > cap) dw *= cap / adw;
        Complex next = w - dw;
        if (next == w) break;
        w = next;
    }
    return {best_w, best_res};
}

} // namespace

ZeroOffPrincipal::ZeroOffPrincipal(int k)
    : std::domain_error("lambert_w branch " + std::to_string(k)
                        + " has no finite value at z = 0") {}

NonConvergence::NonConvergence(int k, Complex z, double residual)
    : std::runtime_error("lambert_w(" + std::to_string(k) + ", " + fmt_complex(z)
                         + ") did not converge; best residual "
                         + std::to_string(residual)) {}

Complex forward_map(Complex w) { return w * std::exp(w); }

namespace detail {

double curve_magnitude(double eta) {
    double s = std::sin(eta);
    return eta / std::abs(s) * std::exp(-eta * std::cos(eta) / s);
}

double curve_eta_for_magnitude(double r) {
    double lo = 1e-12, hi = kPi - 1e-12;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (curve_magnitude(mid) < r ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

// Region index ignoring boundary ownership; ties go to the left neighbour.
long strict_band_index(double x, double a) {
    long m = (long)std::floor(a / kPi);
    if (m % 2 != 0) return (m + 1) / 2;  // gap band: no curve at this height
    long k0 = m / 2;
    double s = std::sin(a);
    if (std::abs(s) < 1e-12) return a / kPi - (double)m < 0.5 ? k0 : k0 + 1;
    return x > -a * std::cos(a) / s ? k0 : k0 + 1;
}

} // namespace

bool branch_compatible(Complex w, int k) {
    if (std::abs(w + 1.0) <= 1e-6)  // all three branches meet at w = -1
        return k == 0 || k == -1 || k == 1;
    double x = w.real();
    double a = std::abs(w.imag());
    double tol = 1e-6 * (1.0 + std::abs(x) + a);
    if (a <= tol) {
        if (x >= -1.0 - tol) return k == 0;
        return k == -1 || k == 1;  // both sides of the real ray
    }
    long kk = w.imag() > 0.0 ? k : -k;
    if (strict_band_index(x, a) == kk) return true;
    long m = (long)std::floor(a / kPi);
    if (m % 2 == 0) {
        long k0 = m / 2;
        double s = std::sin(a);
        if (std::abs(s) < 1e-12) return kk == k0 || kk == k0 + 1;
        double xb = -a * std::cos(a) / s;
        if (std::abs(x - xb) <= 1e-6 * (1.0 + std::abs(xb) + a))
            return kk == k0 || kk == k0 + 1;
    }
    return false;
}

} // namespace detail

int branch_of(Complex w) {
    double x = w.real();
    double a = std::abs(w.imag());
    if (a <= 1e-9 * (1.0 + std::abs(x)))  // treat as real: cut ownership applies
        return x >= -1.0 ? 0 : -1;
    int sgn = w.imag() > 0.0 ? 1 : -1;
    long m = (long)std::floor(a / kPi);
    long k;
    if (m % 2 == 0) {
        long k0 = m / 2;
        double s = std::sin(a);
        if (std::abs(s) < 1e-12) {
            k = a / kPi - (double)m < 0.5 ? k0 : k0 + 1;
        } else {
            double xb = -a * std::cos(a) / s;
            if (std::abs(x - xb) <= 1e-9 * (1.0 + std::abs(xb) + a))
                k = sgn > 0 ? k0 : k0 + 1;  // on the curve: cut image from above
            else
                k = x > xb ? k0 : k0 + 1;
        }
    } else {
        k = (m + 1) / 2;
    }
    return (int)(sgn > 0 ? k : -k);
}

Complex lambert_w(int k, Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("lambert_w: non-finite argument");
    if (z.real() == 0.0 && z.imag() == 0.0) {
        if (k == 0) return Complex(0.0, 0.0);
        throw ZeroOffPrincipal(k);
    }
    if (z.imag() == 0.0) z = Complex(z.real(), 0.0);  // -0 folds onto the upper side
    if (z.imag() < 0.0) return std::conj(lambert_w(-k, std::conj(z)));

    const double r = std::abs(z);
    const double accept = 1e-12 * std::max(1.0, r);
    Complex seeds[4];
    int n = 0;
    seeds[n++] = primary_seed(k, z);
    if ((k == 0 || k == -1) && z.real() < 0.0 && z.imag() <= -z.real() && r >= 0.42) {
        Complex c = curve_point(detail::curve_eta_for_magnitude(r));
        seeds[n++] = k == 0 ? c : std::conj(c);
    }
    seeds[n++] = log_branch_seed(k, z);
    seeds[n++] = std::log(z) + Complex(0.0, 2.0 * kPi * k);

    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        bool dup = false;
        for (int j = 0; j < i; ++j) dup |= std::abs(seeds[i] - seeds[j]) < 1e-12;
        if (dup) continue;
        IterationResult res = refine(seeds[i], z);
        if (res.residual <= accept && detail::branch_compatible(res.w, k)) return res.w;
        best = std::min(best, res.residual);
    }
    throw NonConvergence(k, z, best);
}

} // namespace fsw
