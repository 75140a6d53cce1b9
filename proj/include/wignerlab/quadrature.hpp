#pragma once

#include "wignerlab/marginals.hpp"
#include "wignerlab/states.hpp"

namespace wignerlab {

// Measurement observable Z = a X + b P (hbar = 1). Not both zero.
struct Observable {
    double a = 1.0, b = 0.0;
};

// Position density |psi(x)|^2 on psi's grid.
SignedDensity1D density_X(const WaveFunction& psi);

// Momentum density |psihat(p)|^2 on the reciprocal grid.
SignedDensity1D density_P(const WaveFunction& psi);

// Quadrature density D_Z(r) for Z = a X + b P:
//   b = 0:  (1/|a|) |psi(r/a)|^2
//   b != 0: (1/|b|) |F[e^{-i c x^2/2} psi](r/b)|^2 with c = -a/b,
// computed by chirp transform on a zero-padded, adaptively supersampled grid so
// the output span covers the tails even for near-position directions. Returned
// on its natural (fine) grid; b < 0 is handled by reflection of the (-a,-b) density.
SignedDensity1D density_Z(const WaveFunction& psi, Observable o);

// chi(alpha, beta) = e^{i alpha beta / 2} \int psi*(y) e^{-i alpha y} psi(y - beta) dy,
// the Weyl characteristic function of the state. Shift by linear interpolation on
// an internally refined grid.
cd characteristic_rhs(const WaveFunction& psi, double alpha, double beta);

} // namespace wignerlab
