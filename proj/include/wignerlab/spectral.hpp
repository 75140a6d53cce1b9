#pragma once

#include "wignerlab/grid.hpp"

namespace wignerlab {

// Complex amplitude sampled on a centered grid.
struct WaveFunction {
    Grid1D grid;
    std::vector<cd> values;
    bool tail_warning = false; // |psi| at the outermost samples is not negligible
};

// Discrete approximation of the unitary continuum Fourier transform
//   (F f)(xi_j) = (1/sqrt(2pi)) \int f(x) e^{-i xi x} dx
// on centered grids, realized as (step/sqrt(2pi)) (-1)^j FFT_j[f_k (-1)^k].
// The output is indexed by g.recip(); sign=+1 uses the kernel e^{+i xi x}.
// Requires n % 4 == 0 so e^{-i pi n/2} = 1 (guaranteed by the Grid1D contract).
std::vector<cd> fourier_centered(const Grid1D& g, const std::vector<cd>& f, int sign);

WaveFunction ft1d(const WaveFunction& psi);        // momentum representation
WaveFunction ift1d(const WaveFunction& phi);       // back to position

// F[e^{-i c x^2 / 2} psi](xi): Fourier transform against chirped plane waves.
// c = 0 reduces exactly to ft1d.
WaveFunction chirp_ft(const WaveFunction& psi, double c);

// Zero-pad in real space by an integer factor: pad*n points on [-pad*L, pad*L),
// same step, original samples centered.
WaveFunction zero_embed(const WaveFunction& psi, int pad);

// Band-limited refinement: zero-pad the centered spectrum by a power-of-two
// factor s and transform back; s*n points on the same interval. Exact for
// amplitudes that are band-limited on the original grid.
WaveFunction supersample(const WaveFunction& psi, int s);

// 2D transform (1/2pi) \int\int w e^{-i(xi x + eta p)} dx dp on the reciprocal grids.
struct Spectrum2D {
    Grid1D gxi, geta;
    std::vector<cd> values; // row-major over xi
    cd at(int i, int j) const { return values[static_cast<std::size_t>(i) * geta.n + j]; }
};
Spectrum2D ft2d(const QuasiDensity2D& w);

} // namespace wignerlab
