#pragma once

#include <complex>
#include <vector>

namespace wignerlab {

using cd = std::complex<double>;

// Centered half-open grid: x_k = -L + k*step, k = 0..n-1, step = 2L/n.
// n must be a power of two (>= 8) so the centered FFT phase factors stay exact.
struct Grid1D {
    int n = 0;
    double L = 0.0;

    Grid1D() = default;
    Grid1D(int n_, double L_);

    double step() const { return 2.0 * L / n; }
    double point(int k) const { return -L + k * step(); }
    std::vector<double> points() const;

    // Frequency partner: same n, spacing 2*pi/(n*step), i.e. L' = pi*n/(2L).
    // recip(recip(g)) == g.
    Grid1D recip() const;

    bool operator==(const Grid1D&) const = default;
};

struct Grid2D {
    Grid1D gx, gp;
};

// Real-valued density on a grid; values may be negative.
struct SignedDensity1D {
    Grid1D grid;
    std::vector<double> values;
};

// Real 2D field, row-major over x: values[ix*gp.n + ip].
struct QuasiDensity2D {
    Grid1D gx, gp;
    std::vector<double> values;

    QuasiDensity2D() = default;
    QuasiDensity2D(const Grid1D& x, const Grid1D& p)
        : gx(x), gp(p), values(static_cast<std::size_t>(x.n) * p.n, 0.0) {}

    double& at(int ix, int ip) { return values[static_cast<std::size_t>(ix) * gp.n + ip]; }
    double at(int ix, int ip) const { return values[static_cast<std::size_t>(ix) * gp.n + ip]; }
};

// Trapezoid rule on the grid (halves the two outermost samples).
double trapezoid(const Grid1D& g, const std::vector<double>& f);
cd trapezoid(const Grid1D& g, const std::vector<cd>& f);

double integrate_2d(const QuasiDensity2D& w);

// Piecewise-linear interpolation, 0 outside [x_0, x_{n-1}].
double lin_interp(const Grid1D& g, const std::vector<double>& f, double x);
cd lin_interp(const Grid1D& g, const std::vector<cd>& f, double x);

double interp_bilinear(const QuasiDensity2D& w, double x, double p);

} // namespace wignerlab
