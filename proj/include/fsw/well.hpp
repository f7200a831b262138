#pragma once

#include "fsw/lambertw.hpp"

namespace fsw {

enum class Parity { even, odd };

/// Square-well description: mass, half-width L, depth V0, and hbar
/// (defaulting to 1 for natural-unit runs).  All strictly positive.
struct WellParameters {
    double mass;
    double half_width;
    double depth;
    double hbar;
    WellParameters(double mass, double half_width, double depth, double hbar = 1.0);
};

/// Dimensionless well strength R = L * sqrt(2 m V0) / hbar.
double strength_parameter(const WellParameters& well);

/// The canonical well of strength R: m = 1/2, L = 1, hbar = 1, depth R^2,
/// in which the binding energy is simply u^2.
WellParameters natural_well(double R);

/// One bound level.  u = beta L and v = alpha L are the scaled exterior
/// decay and interior wave numbers (u^2 + v^2 = R^2), theta = atan2(v, u) is
/// the phase on the |w| = R circle, and binding_energy is positive (the
/// particle's total energy is its negative).  level_index counts from 0 at
/// the ground state (largest u, smallest v).
struct BoundState {
    int level_index;
    Parity parity;
    double u;
    double v;
    double theta;
    double binding_energy;
};

/// Binding energy E = u^2 hbar^2 / (2 m L^2).  Requires 0 <= u <= R (up to
/// rounding); throws std::domain_error otherwise.
double energy_from_u(const WellParameters& well, double u);

/// Piecewise bound-state eigenfunction:
///   D e^{beta x}                      for x < -L
///   A e^{-i alpha x} + B e^{i alpha x} for |x| <= L
///   C e^{-beta x}                     for x > L
/// with B = +A, D = +C for even states and B = -A, D = -C for odd ones.
/// A is real positive and the whole function has unit L2 norm.
struct WaveFunction {
    Complex A, B, C, D;
    double alpha;
    double beta;
    double L;

    Complex evaluate(double x) const;
    Complex derivative(double x) const;
};

/// Build the normalized wavefunction for a state of the given well.
WaveFunction wavefunction(const BoundState& state, const WellParameters& well);

/// Free-function form of WaveFunction::evaluate.
Complex evaluate_wavefunction(const WaveFunction& wf, double x);

} // namespace fsw
