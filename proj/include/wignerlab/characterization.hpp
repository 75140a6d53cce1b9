#pragma once

#include "wignerlab/quadrature.hpp"
#include "wignerlab/wigner.hpp"

namespace wignerlab {

// Half-turn fan theta_k = k*pi/nang with exact axis components (cos(pi/2)
// evaluated in floating point is ~6e-17, which would silently miss the exact
// axis paths downstream).
Direction fan_direction(int k, int nang);

struct AngleRecord {
    double theta = 0.0; // radians
    Direction d;
    double l1_gap = 0.0;   // L1 distance pushforward vs quadrature density
    double linf_gap = 0.0; // sup distance on the comparison grid
};

struct VerificationReport {
    std::vector<AngleRecord> angles;
    double max_l1 = 0.0;
    double max_linf = 0.0;
};

// Working-resolution Wigner function used by the verification drivers: the
// state is spectrally refined 4x and transformed onto a momentum grid chosen
// so that all half-shifts land on exact nodes.
struct VerificationInputs {
    WaveFunction psi_fine;
    QuasiDensity2D w;
    double imag_residue = 0.0;
};
VerificationInputs make_verification_inputs(const WaveFunction& psi);
Grid1D verification_p_grid(const Grid1D& g);

// Compare the pushforward marginal of w against the quadrature density D_Z for
// every direction of the fan, on a shared z-grid.
VerificationReport verify_marginal_theorem(const WaveFunction& psi, const QuasiDensity2D& w,
                                           int nang);
VerificationReport verify_marginal_theorem(const WaveFunction& psi, int nang);

// Fourier-slice identity: max over the fan and the zeta list of
//   | 2pi * ft2d(w)(a zeta, b zeta) - chi(a zeta, b zeta) |,
// with the 2D transform evaluated on a zero-padded frequency grid (band-cropped)
// after decimating w to a bandwidth-safe size.
double verify_slice_identity(const WaveFunction& psi, const QuasiDensity2D& w,
                             const std::vector<double>& zetas, int nang);
double verify_slice_identity(const WaveFunction& psi, const std::vector<double>& zetas,
                             int nang);

// Directional marginals stacked over the fan theta_k = k*pi/nang.
struct Sinogram {
    Grid1D gz;
    int nang = 0;
    std::vector<double> values; // [k*gz.n + iz]
    double at(int k, int iz) const { return values[static_cast<std::size_t>(k) * gz.n + iz]; }
};

// Slices from the quadrature densities D_{Z(theta_k)} (measurement side).
Sinogram make_sinogram_quadrature(const WaveFunction& psi, int nang, const Grid1D& gz);
// Slices from the pushforward marginals of a computed density (phase-space side).
Sinogram make_sinogram_pushforward(const QuasiDensity2D& w, int nang, const Grid1D& gz);

// Tomographic reconstruction: 1D-transform every slice, assemble the 2D
// characteristic function by polar bilinear interpolation (Fourier-slice
// identity), and invert. The result is renormalized to unit mass; raw_mass
// receives the mass before renormalization. Requires nang >= 8.
QuasiDensity2D reconstruct_from_marginals(const Sinogram& s, const Grid2D& target,
                                          double* raw_mass = nullptr);

struct UniquenessResult {
    bool states_differ = false; // L1 distance of the two Wigner functions > 1e-3
    double wigner_l1 = 0.0;
    double max_marginal_gap = 0.0; // largest per-angle L1 gap of the marginals
    double gap_theta = 0.0;        // angle attaining it
};

// Constructive probe of marginal uniqueness: distinct states must exhibit a
// marginal gap somewhere on the fan.
UniquenessResult uniqueness_probe(const WaveFunction& psi1, const WaveFunction& psi2, int nang);

} // namespace wignerlab
