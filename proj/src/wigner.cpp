#include "wignerlab/wigner.hpp"

#include <cmath>
#include <stdexcept>

namespace wignerlab {

namespace {

// autocorrelation rows against the half-shift lattice + inverse transform over gamma
// fsign = +1: kernel e^{+i gamma q} (position form); -1: e^{-i gamma q} (momentum form)
void wigner_rows(const Grid1D& ggam, const std::vector<cd>& amp, const Grid1D& gamp,
                 int center_stride, int shift_stride, bool exact, int nrows,
                 int fsign, QuasiDensity2D& out, bool transpose, double& imag_max) {
    const int m = ggam.n;
    const int na = gamp.n;
    const double inv_s2pi = 1.0 / std::sqrt(2.0 * M_PI);
    std::vector<cd> rho(m);
    const double half_step = 0.5 * ggam.step();
    for (int r = 0; r < nrows; ++r) {
        const int i = r * center_stride;
        if (exact) {
            for (int j = 0; j < m; ++j) {
                const int js = j - m / 2;
                const int ip = i + js * shift_stride;
                const int im = i - js * shift_stride;
                rho[j] = (ip >= 0 && ip < na && im >= 0 && im < na)
                             ? std::conj(amp[ip]) * amp[im]
                             : cd(0.0);
            }
        } else {
            const double q = gamp.point(i);
            for (int j = 0; j < m; ++j) {
                const double h = (j - m / 2) * half_step;
                rho[j] = std::conj(lin_interp(gamp, amp, q + h)) * lin_interp(gamp, amp, q - h);
            }
        }
        const std::vector<cd> row = fourier_centered(ggam, rho, fsign);
        for (int j = 0; j < m; ++j) {
            const cd v = row[j] * inv_s2pi;
            imag_max = std::max(imag_max, std::abs(v.imag()));
            if (transpose) out.at(j, r) = v.real();
            else out.at(r, j) = v.real();
        }
    }
}

// smallest power-of-two refinement (<= limit) making ratio*q an integer, or 0
int integer_boost(double ratio, int limit) {
    for (int q = 1; q <= limit; q *= 2) {
        const double t = ratio * q;
        if (std::abs(t - std::round(t)) < 1e-9) return q;
    }
    return 0;
}

} // namespace

QuasiDensity2D compute_wigner(const WaveFunction& psi, const Grid1D& gp, double* imag_residue) {
    if (std::abs(norm(psi) - 1.0) > 1e-6)
        throw std::invalid_argument("compute_wigner: state is not normalized");
    const Grid1D ggam = gp.recip();
    const double ratio = 0.5 * ggam.step() / psi.grid.step();
    const int q = integer_boost(ratio, 8);

    QuasiDensity2D w(psi.grid, gp);
    double imag_max = 0.0;
    if (q >= 1) {
        const WaveFunction fine = supersample(psi, q);
        const int stride = static_cast<int>(std::round(ratio * q));
        wigner_rows(ggam, fine.values, fine.grid, q, stride, true, psi.grid.n,
                    +1, w, false, imag_max);
    } else {
        wigner_rows(ggam, psi.values, psi.grid, 1, 0, false, psi.grid.n,
                    +1, w, false, imag_max);
    }
    if (imag_residue) *imag_residue = imag_max;
    return w;
}

QuasiDensity2D compute_wigner_momentum_form(const WaveFunction& psi, const Grid1D& gx,
                                            double* imag_residue) {
    if (std::abs(norm(psi) - 1.0) > 1e-6)
        throw std::invalid_argument("compute_wigner_momentum_form: state is not normalized");
    const Grid1D gpout = psi.grid.recip();
    const Grid1D ggam = gx.recip();

    // refine psihat by zero-padding psi in x until the half-shift is a whole
    // number of fine momentum steps (falls back to interpolation)
    int embed = 0;
    int stride = 0;
    for (int e = 2; e <= 16; e *= 2) {
        const double fine_step = M_PI / (e * psi.grid.L);
        const double r = 0.5 * ggam.step() / fine_step;
        if (std::abs(r - std::round(r)) < 1e-9) {
            embed = e;
            stride = static_cast<int>(std::round(r));
            break;
        }
    }
    const WaveFunction phihat = ft1d(zero_embed(psi, embed ? embed : 2));
    const int center_stride = phihat.grid.n / gpout.n;

    QuasiDensity2D w(gx, gpout);
    double imag_max = 0.0;
    wigner_rows(ggam, phihat.values, phihat.grid, center_stride, stride, embed != 0,
                gpout.n, -1, w, true, imag_max);
    if (imag_residue) *imag_residue = imag_max;

    const double mass = integrate_2d(w);
    for (auto& v : w.values) v /= mass;
    return w;
}

QuasiDensity2D oracle_wigner(const StateSpec& s, const Grid1D& gx, const Grid1D& gp) {
    QuasiDensity2D w(gx, gp);
    const std::vector<double> xs = gx.points();
    const std::vector<double> ps = gp.points();

    if (const auto* gs = std::get_if<GaussianSpec>(&s.spec)) {
        const double s2 = gs->sigma * gs->sigma;
        for (int i = 0; i < gx.n; ++i)
            for (int j = 0; j < gp.n; ++j) {
                const double dx = xs[i] - gs->x0, dp = ps[j] - gs->p0;
                w.at(i, j) = std::exp(-dx * dx / s2 - s2 * dp * dp) / M_PI;
            }
        return w;
    }
    if (const auto* fs = std::get_if<FockSpec>(&s.spec)) {
        if (fs->n > 3)
            throw std::invalid_argument("oracle_wigner: fock oracle implemented for n <= 3");
        const double sgn = (fs->n % 2) ? -1.0 : 1.0;
        for (int i = 0; i < gx.n; ++i)
            for (int j = 0; j < gp.n; ++j) {
                const double r2 = xs[i] * xs[i] + ps[j] * ps[j];
                const double u = 2.0 * r2;
                double lag = 1.0; // Laguerre L_n(u)
                if (fs->n == 1) lag = 1.0 - u;
                else if (fs->n == 2) lag = 1.0 - 2.0 * u + 0.5 * u * u;
                else if (fs->n == 3) lag = 1.0 - 3.0 * u + 1.5 * u * u - u * u * u / 6.0;
                w.at(i, j) = sgn * lag * std::exp(-r2) / M_PI;
            }
        return w;
    }
    if (const auto* cs = std::get_if<CatSpec>(&s.spec)) {
        const double a = cs->alpha;
        const double sg = cs->parity;
        const double n2 = 2.0 * (1.0 + sg * std::exp(-a * a));
        for (int i = 0; i < gx.n; ++i)
            for (int j = 0; j < gp.n; ++j) {
                const double x = xs[i], p = ps[j];
                const double v = std::exp(-(x - a) * (x - a) - p * p)
                               + std::exp(-(x + a) * (x + a) - p * p)
                               + sg * 2.0 * std::exp(-x * x - p * p) * std::cos(2.0 * a * p);
                w.at(i, j) = v / (M_PI * n2);
            }
        return w;
    }
    throw std::invalid_argument("oracle_wigner: no closed form for this state");
}

NegativityReport negativity_report(const QuasiDensity2D& w) {
    NegativityReport rep;
    QuasiDensity2D neg(w.gx, w.gp);
    const double cell = w.gx.step() * w.gp.step();
    for (std::size_t k = 0; k < w.values.size(); ++k) {
        const double v = w.values[k];
        rep.min_value = std::min(rep.min_value, v);
        if (v < 0.0) {
            neg.values[k] = v;
            rep.negative_area += cell;
        }
    }
    rep.negative_mass = integrate_2d(neg);
    return rep;
}

} // namespace wignerlab
