#pragma once

#include <complex>
#include <stdexcept>

namespace fsw {

using Complex = std::complex<double>;

/// Thrown when a branch other than 0 is requested at z == 0, where only the
/// principal branch takes a finite value.
struct ZeroOffPrincipal : std::domain_error {
    explicit ZeroOffPrincipal(int k);
};

/// Thrown when the iterative refinement fails to reach its residual target.
struct NonConvergence : std::runtime_error {
    NonConvergence(int k, Complex z, double residual);
};

/// The map w -> w * exp(w) that lambert_w inverts.
Complex forward_map(Complex w);

/// Branch k of the Lambert W function.
///
/// Branch cuts lie on the negative real axis: (-inf, -1/e] for k in {0, -1}
/// and (-inf, 0] for all other branches, with the value on a cut taken as the
/// limit from above (Im z -> 0+).  The result satisfies
/// |w exp(w) - z| <= 1e-12 * max(1, |z|).  z must be finite.
Complex lambert_w(int k, Complex z);

/// Index of the branch region containing w.  A point within ~1e-9 (relative)
/// of a separating curve resolves to the branch that owns that curve under
/// the limit-from-above convention, so branch_of(lambert_w(k, z)) == k also
/// holds for z on a cut.
int branch_of(Complex w);

namespace detail {
/// Magnitude of w * exp(w) along the separating curve -eta*cot(eta) + i*eta;
/// strictly increasing from 1/e to infinity for eta in (0, pi).
double curve_magnitude(double eta);

/// Inverse of curve_magnitude: the eta in (0, pi) with curve_magnitude(eta) == r.
/// Requires r >= 1/e (below that the curve never reaches magnitude r).
double curve_eta_for_magnitude(double r);

/// True when w lies in (or within tol of the boundary of) the closed region
/// of branch k.  Used to reject refinement results that hopped basins.
bool branch_compatible(Complex w, int k);
} // namespace detail

} // namespace fsw
