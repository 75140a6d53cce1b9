#include "wignerlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wignerlab {

namespace {

constexpr int kDensityPad = 64;   // zero-embedding factor for the chirp route
constexpr int kDensityMaxSS = 64; // supersampling cap

int pow2_at_least(double x, int lo, int hi) {
    int s = lo;
    while (s < hi && s < x) s *= 2;
    return s;
}

// base refinement keeps the effective sample count at >= 2048 regardless of
// the input grid
int base_supersample(const Grid1D& g) {
    return pow2_at_least(2048.0 / g.n, 1, kDensityMaxSS);
}

SignedDensity1D reflect(const SignedDensity1D& in) {
    SignedDensity1D out;
    out.grid = in.grid;
    out.values.assign(in.values.size(), 0.0);
    // z_k -> -z_k maps node k to node n-k on the half-open grid; -z_0 falls outside
    const int n = in.grid.n;
    for (int k = 1; k < n; ++k) out.values[k] = in.values[n - k];
    return out;
}

} // namespace

SignedDensity1D density_X(const WaveFunction& psi) {
    SignedDensity1D d;
    d.grid = psi.grid;
    d.values.resize(psi.grid.n);
    for (int k = 0; k < psi.grid.n; ++k) d.values[k] = std::norm(psi.values[k]);
    return d;
}

SignedDensity1D density_P(const WaveFunction& psi) {
    const WaveFunction phi = ft1d(psi);
    SignedDensity1D d;
    d.grid = phi.grid;
    d.values.resize(phi.grid.n);
    for (int k = 0; k < phi.grid.n; ++k) d.values[k] = std::norm(phi.values[k]);
    return d;
}

SignedDensity1D density_Z(const WaveFunction& psi, Observable o) {
    if (o.a == 0.0 && o.b == 0.0)
        throw std::invalid_argument("density_Z: observable must be nonzero");

    if (o.b == 0.0) {
        // D(r) = |psi(r/a)|^2 / |a| on the scaled grid
        const WaveFunction fine = supersample(psi, base_supersample(psi.grid));
        const int n = fine.grid.n;
        SignedDensity1D d;
        d.grid = Grid1D(n, std::abs(o.a) * fine.grid.L);
        d.values.assign(n, 0.0);
        const double inv = 1.0 / std::abs(o.a);
        for (int k = 0; k < n; ++k) {
            const int src = (o.a > 0.0) ? k : (k == 0 ? -1 : n - k);
            d.values[k] = (src < 0) ? 0.0 : std::norm(fine.values[src]) * inv;
        }
        return d;
    }

    if (o.b < 0.0)
        return reflect(density_Z(psi, {-o.a, -o.b}));

    // span of the chirp-route frequency grid is pi/step(fine); widen it until
    // the rescaled output grid covers |z| up to |a| L + |b| L_recip
    const double need = 1.0 + std::abs(o.a / o.b) * psi.grid.L / psi.grid.recip().L;
    const int ss = pow2_at_least(std::max(static_cast<double>(base_supersample(psi.grid)), need),
                                 1, kDensityMaxSS);

    const double c = -o.a / o.b;
    const WaveFunction amp = chirp_ft(zero_embed(supersample(psi, ss), kDensityPad), c);

    SignedDensity1D d;
    d.grid = Grid1D(amp.grid.n, o.b * amp.grid.L);
    d.values.resize(amp.grid.n);
    const double inv = 1.0 / o.b;
    for (int k = 0; k < amp.grid.n; ++k) d.values[k] = std::norm(amp.values[k]) * inv;
    return d;
}

cd characteristic_rhs(const WaveFunction& psi, double alpha, double beta) {
    int ss = 1;
    while (ss < 16 && psi.grid.n * ss < 8192) ss *= 2;
    const WaveFunction fine = supersample(psi, ss);
    const Grid1D& g = fine.grid;
    std::vector<cd> integrand(g.n);
    for (int k = 0; k < g.n; ++k) {
        const double y = g.point(k);
        integrand[k] = std::conj(fine.values[k]) * std::exp(cd(0.0, -alpha * y))
                     * lin_interp(g, fine.values, y - beta);
    }
    return std::exp(cd(0.0, 0.5 * alpha * beta)) * trapezoid(g, integrand);
}

} // namespace wignerlab
