#include "fsw/well.hpp"

#include <cmath>
#include <stdexcept>

namespace fsw {

namespace {

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::invalid_argument(std::string(what) + " must be positive");
}

} // namespace

WellParameters::WellParameters(double mass_, double half_width_, double depth_, double hbar_)
    : mass(mass_), half_width(half_width_), depth(depth_), hbar(hbar_) {
    require_positive(mass, "mass");
    require_positive(half_width, "half-width");
    require_positive(depth, "depth");
    require_positive(hbar, "hbar");
}

double strength_parameter(const WellParameters& well) {
    return well.half_width * std::sqrt(2.0 * well.mass * well.depth) / well.hbar;
}

WellParameters natural_well(double R) {
    if (!(R > 0.0) || !std::isfinite(R))
        throw std::invalid_argument("strength parameter must be positive");
    return WellParameters(0.5, 1.0, R * R, 1.0);
}

double energy_from_u(const WellParameters& well, double u) {
    double R = strength_parameter(well);
    if (u < 0.0 || u > R * (1.0 + 1e-12))
        throw std::domain_error("u must lie in [0, R]");
    double k = u * well.hbar / well.half_width;
    return k * k / (2.0 * well.mass);
}

Complex WaveFunction::evaluate(double x) const {
    if (x > L) return C * std::exp(-beta * x);
    if (x < -L) return D * std::exp(beta * x);
    Complex e = std::exp(Complex(0.0, alpha * x));
    return A * std::conj(e) + B * e;
}

Complex WaveFunction::derivative(double x) const {
    if (x > L) return -beta * C * std::exp(-beta * x);
    if (x < -L) return beta * D * std::exp(beta * x);
    Complex e = std::exp(Complex(0.0, alpha * x));
    return Complex(0.0, alpha) * (B * e - A * std::conj(e));
}

WaveFunction wavefunction(const BoundState& state, const WellParameters& well) {
    double R = strength_parameter(well);
    double circle = state.u * state.u + state.v * state.v - R * R;
    if (std::abs(circle) > 1e-6 * R * R)
        throw std::invalid_argument("state does not satisfy u^2 + v^2 = R^2 for this well");
    if (!(state.v > 0.0) || !(state.u > 0.0))
        throw std::invalid_argument("bound state requires u > 0 and v > 0");

    double L = well.half_width;
    double u = state.u, v = state.v;
    double alpha = v / L;
    double beta = u / L;
    bool even = state.parity == Parity::even;

    // Unit L2 norm: |psi|^2 integrates to 4A^2 (L +- sin(2v)/(2 alpha)) inside
    // and, folding C's e^{+u} against the exterior decay, 4A^2 trig^2(v)/beta
    // outside.  A stays real positive.
    double interior = L + (even ? 1.0 : -1.0) * std::sin(2.0 * v) / (2.0 * alpha);
    double trig = even ? std::cos(v) : std::sin(v);
    double a = 0.5 / std::sqrt(interior + trig * trig / beta);

    WaveFunction wf;
    wf.alpha = alpha;
    wf.beta = beta;
    wf.L = L;
    wf.A = Complex(a, 0.0);
    wf.B = even ? wf.A : -wf.A;
    // Continuity of value at x = +L fixes C; parity fixes D.
    Complex psi_in_L = even ? Complex(2.0 * a * std::cos(v), 0.0)
                            : Complex(0.0, -2.0 * a * std::sin(v));
    wf.C = psi_in_L * std::exp(u);
    wf.D = even ? wf.C : -wf.C;
    return wf;
}

Complex evaluate_wavefunction(const WaveFunction& wf, double x) { return wf.evaluate(x); }

} // namespace fsw
