#include "wignerlab/marginals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wignerlab {

namespace {

void check_direction(Direction d) {
    if (d.a == 0.0 && d.b == 0.0)
        throw std::invalid_argument("pushforward: direction must be nonzero");
}

} // namespace

Grid1D default_z_grid(const QuasiDensity2D& w, Direction d) {
    check_direction(d);
    return Grid1D(w.gx.n, std::abs(d.a) * w.gx.L + std::abs(d.b) * w.gp.L);
}

SignedDensity1D pushforward_density(const QuasiDensity2D& w, Direction d, const Grid1D& gz) {
    check_direction(d);
    SignedDensity1D out;
    out.grid = gz;
    out.values.assign(gz.n, 0.0);

    if (std::abs(d.b) >= std::abs(d.a)) {
        // integrate over x, interpolate along p
        const std::vector<double> xs = w.gx.points();
        const double dx = w.gx.step();
        std::vector<double> row(w.gp.n);
        for (int iz = 0; iz < gz.n; ++iz) {
            const double z = gz.point(iz);
            double acc = 0.0;
            for (int i = 0; i < w.gx.n; ++i) {
                const double p = (z - d.a * xs[i]) / d.b;
                double v = 0.0;
                const double t = (p + w.gp.L) / w.gp.step();
                const double fl = std::floor(t);
                const int j0 = static_cast<int>(fl);
                const double fr = t - fl;
                if (j0 >= 0 && j0 <= w.gp.n - 2)
                    v = (1.0 - fr) * w.at(i, j0) + fr * w.at(i, j0 + 1);
                else if (j0 == w.gp.n - 1 && fr == 0.0)
                    v = w.at(i, j0);
                const double wt = (i == 0 || i == w.gx.n - 1) ? 0.5 : 1.0;
                acc += wt * v;
            }
            out.values[iz] = acc * dx / std::abs(d.b);
        }
    } else {
        // integrate over p, interpolate along x
        const std::vector<double> ps = w.gp.points();
        const double dp = w.gp.step();
        for (int iz = 0; iz < gz.n; ++iz) {
            const double z = gz.point(iz);
            double acc = 0.0;
            for (int j = 0; j < w.gp.n; ++j) {
                const double x = (z - d.b * ps[j]) / d.a;
                double v = 0.0;
                const double t = (x + w.gx.L) / w.gx.step();
                const double fl = std::floor(t);
                const int i0 = static_cast<int>(fl);
                const double fr = t - fl;
                if (i0 >= 0 && i0 <= w.gx.n - 2)
                    v = (1.0 - fr) * w.at(i0, j) + fr * w.at(i0 + 1, j);
                else if (i0 == w.gx.n - 1 && fr == 0.0)
                    v = w.at(i0, j);
                const double wt = (j == 0 || j == w.gp.n - 1) ? 0.5 : 1.0;
                acc += wt * v;
            }
            out.values[iz] = acc * dp / std::abs(d.a);
        }
    }
    return out;
}

SignedDensity1D pushforward_density(const QuasiDensity2D& w, Direction d) {
    return pushforward_density(w, d, default_z_grid(w, d));
}

double interval_mass(const SignedDensity1D& g, double u, double v) {
    if (u > v)
        throw std::invalid_argument("interval_mass: interval endpoints out of order");
    const Grid1D& gr = g.grid;
    const double x0 = -gr.L;
    const double xe = gr.point(gr.n - 1);
    u = std::max(u, x0);
    v = std::min(v, xe);
    if (u >= v) return 0.0;

    // antiderivative of the linear segment k evaluated locally
    auto seg_part = [&](int k, double a, double b) {
        // integrate segment [x_k, x_{k+1}] from a to b (both inside)
        const double d = gr.step();
        const double fa = g.values[k] + (g.values[k + 1] - g.values[k]) * (a - gr.point(k)) / d;
        const double fb = g.values[k] + (g.values[k + 1] - g.values[k]) * (b - gr.point(k)) / d;
        return 0.5 * (fa + fb) * (b - a);
    };

    const double d = gr.step();
    int ku = static_cast<int>(std::floor((u - x0) / d));
    int kv = static_cast<int>(std::floor((v - x0) / d));
    ku = std::clamp(ku, 0, gr.n - 2);
    kv = std::clamp(kv, 0, gr.n - 2);
    if (ku == kv) return seg_part(ku, u, v);

    double total = seg_part(ku, u, gr.point(ku + 1));
    for (int k = ku + 1; k < kv; ++k)
        total += 0.5 * (g.values[k] + g.values[k + 1]) * d;
    total += seg_part(kv, gr.point(kv), v);
    return total;
}

double check_direction_scaling(const QuasiDensity2D& w, Direction d, double c,
                               const std::vector<std::pair<double, double>>& intervals) {
    if (c == 0.0)
        throw std::invalid_argument("check_direction_scaling: c must be nonzero");
    check_direction(d);
    const Grid1D gz = default_z_grid(w, d);
    // scaled grid hits exactly the same interpolation queries: z/(c) on gz nodes
    const Grid1D gzc(gz.n, std::abs(c) * gz.L);
    const SignedDensity1D g1 = pushforward_density(w, d, gz);
    const SignedDensity1D g2 = pushforward_density(w, {c * d.a, c * d.b}, gzc);

    double worst = 0.0;
    for (const auto& [u, v] : intervals) {
        if (u > v)
            throw std::invalid_argument("check_direction_scaling: interval out of order");
        const double lo = std::min(u / c, v / c);
        const double hi = std::max(u / c, v / c);
        const double m1 = interval_mass(g1, lo, hi);
        const double m2 = interval_mass(g2, u, v);
        worst = std::max(worst, std::abs(m1 - m2));
    }
    return worst;
}

} // namespace wignerlab
