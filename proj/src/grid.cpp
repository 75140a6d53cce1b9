#include "wignerlab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace wignerlab {

Grid1D::Grid1D(int n_, double L_) : n(n_), L(L_) {
    if (n < 8 || (n & (n - 1)) != 0)
        throw std::invalid_argument("Grid1D: n must be a power of two >= 8");
    if (!(L > 0.0))
        throw std::invalid_argument("Grid1D: L must be positive");
}

std::vector<double> Grid1D::points() const {
    std::vector<double> x(n);
    const double d = step();
    for (int k = 0; k < n; ++k) x[k] = -L + k * d;
    return x;
}

Grid1D Grid1D::recip() const {
    return Grid1D(n, M_PI * n / (2.0 * L));
}

double trapezoid(const Grid1D& g, const std::vector<double>& f) {
    if (static_cast<int>(f.size()) != g.n)
        throw std::invalid_argument("trapezoid: size mismatch");
    double s = 0.0;
    for (double v : f) s += v;
    s -= 0.5 * (f.front() + f.back());
    return s * g.step();
}

cd trapezoid(const Grid1D& g, const std::vector<cd>& f) {
    if (static_cast<int>(f.size()) != g.n)
        throw std::invalid_argument("trapezoid: size mismatch");
    cd s = 0.0;
    for (const cd& v : f) s += v;
    s -= 0.5 * (f.front() + f.back());
    return s * g.step();
}

double integrate_2d(const QuasiDensity2D& w) {
    std::vector<double> rows(w.gx.n);
    std::vector<double> tmp(w.gp.n);
    for (int i = 0; i < w.gx.n; ++i) {
        for (int j = 0; j < w.gp.n; ++j) tmp[j] = w.at(i, j);
        rows[i] = trapezoid(w.gp, tmp);
    }
    return trapezoid(w.gx, rows);
}

namespace {

// common index/fraction computation; returns false when x is outside the grid
inline bool locate(const Grid1D& g, double x, int& i0, double& fr) {
    const double t = (x + g.L) / g.step();
    const double fl = std::floor(t);
    i0 = static_cast<int>(fl);
    fr = t - fl;
    if (i0 >= 0 && i0 <= g.n - 2) return true;
    if (i0 == g.n - 1 && fr == 0.0) { // exact last node
        i0 = g.n - 2;
        fr = 1.0;
        return true;
    }
    return false;
}

} // namespace

double lin_interp(const Grid1D& g, const std::vector<double>& f, double x) {
    int i0; double fr;
    if (!locate(g, x, i0, fr)) return 0.0;
    return (1.0 - fr) * f[i0] + fr * f[i0 + 1];
}

cd lin_interp(const Grid1D& g, const std::vector<cd>& f, double x) {
    int i0; double fr;
    if (!locate(g, x, i0, fr)) return cd(0.0);
    return (1.0 - fr) * f[i0] + fr * f[i0 + 1];
}

double interp_bilinear(const QuasiDensity2D& w, double x, double p) {
    int i0, j0; double fx, fp;
    if (!locate(w.gx, x, i0, fx)) return 0.0;
    if (!locate(w.gp, p, j0, fp)) return 0.0;
    return (1.0 - fx) * (1.0 - fp) * w.at(i0, j0) + fx * (1.0 - fp) * w.at(i0 + 1, j0)
         + (1.0 - fx) * fp * w.at(i0, j0 + 1) + fx * fp * w.at(i0 + 1, j0 + 1);
}

} // namespace wignerlab
