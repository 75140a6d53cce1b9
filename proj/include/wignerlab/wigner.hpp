#pragma once

#include "wignerlab/states.hpp"

namespace wignerlab {

// Wigner quasidistribution of a normalized pure state (hbar = 1):
//   w(x, p) = (1/2pi) \int psi*(x + g/2) psi(x - g/2) e^{+i g p} dg.
// Rows live on psi's own grid; the gamma quadrature grid is the reciprocal of
// the requested p-grid, so the row transform lands exactly on gp. Half-shifts
// psi(x +- g/2) are taken at exact nodes whenever a power-of-two spectral
// refinement (<= 8x) makes the shift an integer number of steps, and by linear
// interpolation otherwise. The imaginary residue of the transform is reported
// through imag_residue (the result keeps only the real part).
// Throws if psi is not normalized to 1e-6.
QuasiDensity2D compute_wigner(const WaveFunction& psi, const Grid1D& gp,
                              double* imag_residue = nullptr);

// Same distribution built from the momentum representation:
//   w(x, p) = (1/2pi) \int psihat*(p + g/2) psihat(p - g/2) e^{-i g x} dg,
// with psihat sampled on a twice-refined reciprocal grid (via zero-padding in x).
// Columns live on recip(psi.grid); the x-grid of the output is gx. The result is
// renormalized to unit mass. An independent construction for cross-checking.
QuasiDensity2D compute_wigner_momentum_form(const WaveFunction& psi, const Grid1D& gx,
                                            double* imag_residue = nullptr);

// Closed-form Wigner functions: gaussian (any), fock n <= 3, cat.
QuasiDensity2D oracle_wigner(const StateSpec& s, const Grid1D& gx, const Grid1D& gp);

struct NegativityReport {
    double min_value = 0.0;     // most negative sample
    double negative_mass = 0.0; // integral of min(w, 0)
    double negative_area = 0.0; // phase-space area where w < 0
};
NegativityReport negativity_report(const QuasiDensity2D& w);

} // namespace wignerlab
