#include "wignerlab/characterization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wignerlab {

namespace {

constexpr int kSlicePad = 64; // frequency zero-padding for the slice-identity transform
constexpr int kReconPad = 8;  // zero-padding for the per-slice transforms

Grid1D shared_z_grid(const QuasiDensity2D& w) {
    return Grid1D(w.gx.n, 1.1 * std::hypot(w.gx.L, w.gp.L));
}

QuasiDensity2D decimate(const QuasiDensity2D& w, int target) {
    const int dx = std::max(1, w.gx.n / target);
    const int dp = std::max(1, w.gp.n / target);
    QuasiDensity2D out(Grid1D(w.gx.n / dx, w.gx.L), Grid1D(w.gp.n / dp, w.gp.L));
    for (int i = 0; i < out.gx.n; ++i)
        for (int j = 0; j < out.gp.n; ++j)
            out.at(i, j) = w.at(i * dx, j * dp);
    return out;
}

// 2D continuum transform of w on a pad-times-refined frequency grid, restricted
// to the band |xi| <= umax, |eta| <= vmax (plus margin); evaluated pointwise by
// bilinear interpolation.
struct BandSpectrum {
    Grid1D gxi, geta; // padded frequency grids
    int i0 = 0, j0 = 0;
    int ki = 0, kj = 0;
    std::vector<cd> vals; // [(i - i0)*kj + (j - j0)]

    cd at_uv(double u, double v) const {
        const double ti = (u + gxi.L) / gxi.step() - i0;
        const double tj = (v + geta.L) / geta.step() - j0;
        const int i = static_cast<int>(std::floor(ti));
        const int j = static_cast<int>(std::floor(tj));
        if (i < 0 || i + 1 >= ki || j < 0 || j + 1 >= kj)
            throw std::logic_error("BandSpectrum: query outside kept band");
        const double fu = ti - i, fv = tj - j;
        const cd s00 = vals[static_cast<std::size_t>(i) * kj + j];
        const cd s10 = vals[static_cast<std::size_t>(i + 1) * kj + j];
        const cd s01 = vals[static_cast<std::size_t>(i) * kj + j + 1];
        const cd s11 = vals[static_cast<std::size_t>(i + 1) * kj + j + 1];
        return (1.0 - fu) * (1.0 - fv) * s00 + fu * (1.0 - fv) * s10
             + (1.0 - fu) * fv * s01 + fu * fv * s11;
    }
};

BandSpectrum padded_band_ft2(const QuasiDensity2D& w, double umax, double vmax, int pad) {
    const int nx = w.gx.n, mp = w.gp.n;
    const Grid1D gpb(pad * mp, pad * w.gp.L);
    const Grid1D geta = gpb.recip();
    const Grid1D gxb(pad * nx, pad * w.gx.L);
    const Grid1D gxi = gxb.recip();

    BandSpectrum bs;
    bs.gxi = gxi;
    bs.geta = geta;

    auto band = [](const Grid1D& g, double lim, int& first) {
        lim += 3.0 * g.step();
        int lo = static_cast<int>(std::ceil((-lim + g.L) / g.step()));
        int hi = static_cast<int>(std::floor((lim + g.L) / g.step()));
        lo = std::max(lo, 0);
        hi = std::min(hi, g.n - 1);
        first = lo;
        return hi - lo + 1;
    };
    bs.kj = band(geta, vmax, bs.j0);
    bs.ki = band(gxi, umax, bs.i0);

    // transform along p per row, keep the band
    std::vector<cd> T(static_cast<std::size_t>(nx) * bs.kj);
    {
        std::vector<cd> buf(gpb.n);
        const int lo = (gpb.n - mp) / 2;
        for (int i = 0; i < nx; ++i) {
            std::fill(buf.begin(), buf.end(), cd(0.0));
            for (int j = 0; j < mp; ++j) buf[lo + j] = cd(w.at(i, j));
            const std::vector<cd> F = fourier_centered(gpb, buf, -1);
            for (int j = 0; j < bs.kj; ++j) T[static_cast<std::size_t>(i) * bs.kj + j] = F[bs.j0 + j];
        }
    }
    // transform along x per kept column, keep the band
    bs.vals.assign(static_cast<std::size_t>(bs.ki) * bs.kj, cd(0.0));
    {
        std::vector<cd> buf(gxb.n);
        const int lo = (gxb.n - nx) / 2;
        for (int j = 0; j < bs.kj; ++j) {
            std::fill(buf.begin(), buf.end(), cd(0.0));
            for (int i = 0; i < nx; ++i) buf[lo + i] = T[static_cast<std::size_t>(i) * bs.kj + j];
            const std::vector<cd> F = fourier_centered(gxb, buf, -1);
            for (int i = 0; i < bs.ki; ++i)
                bs.vals[static_cast<std::size_t>(i) * bs.kj + j] = F[bs.i0 + i];
        }
    }
    // fourier_centered applied twice carries (1/sqrt(2pi))^2 = 1/(2pi), the 2D prefactor
    return bs;
}

} // namespace

Direction fan_direction(int k, int nang) {
    if (nang < 1 || k < 0 || k >= nang)
        throw std::invalid_argument("fan_direction: need 0 <= k < nang");
    if (k == 0) return {1.0, 0.0};
    if (2 * k == nang) return {0.0, 1.0};
    const double th = k * M_PI / nang;
    return {std::cos(th), std::sin(th)};
}

Grid1D verification_p_grid(const Grid1D& g) {
    return Grid1D(8 * g.n, M_PI * g.n / (16.0 * g.L));
}

VerificationInputs make_verification_inputs(const WaveFunction& psi) {
    VerificationInputs in;
    in.psi_fine = supersample(psi, 4);
    in.w = compute_wigner(in.psi_fine, verification_p_grid(psi.grid), &in.imag_residue);
    return in;
}

VerificationReport verify_marginal_theorem(const WaveFunction& psi, const QuasiDensity2D& w,
                                           int nang) {
    if (nang < 1) throw std::invalid_argument("verify_marginal_theorem: nang must be positive");
    const Grid1D gz = shared_z_grid(w);
    VerificationReport rep;
    rep.angles.reserve(nang);
    std::vector<double> diff(gz.n);
    for (int k = 0; k < nang; ++k) {
        const Direction d = fan_direction(k, nang);
        const SignedDensity1D pf = pushforward_density(w, d, gz);
        const SignedDensity1D q = density_Z(psi, {d.a, d.b});
        AngleRecord rec;
        rec.theta = k * M_PI / nang;
        rec.d = d;
        for (int iz = 0; iz < gz.n; ++iz) {
            diff[iz] = std::abs(pf.values[iz] - lin_interp(q.grid, q.values, gz.point(iz)));
            rec.linf_gap = std::max(rec.linf_gap, diff[iz]);
        }
        rec.l1_gap = trapezoid(gz, diff);
        rep.max_l1 = std::max(rep.max_l1, rec.l1_gap);
        rep.max_linf = std::max(rep.max_linf, rec.linf_gap);
        rep.angles.push_back(rec);
    }
    return rep;
}

VerificationReport verify_marginal_theorem(const WaveFunction& psi, int nang) {
    return verify_marginal_theorem(psi, make_verification_inputs(psi).w, nang);
}

double verify_slice_identity(const WaveFunction& psi, const QuasiDensity2D& w,
                             const std::vector<double>& zetas, int nang) {
    if (nang < 1 || zetas.empty())
        throw std::invalid_argument("verify_slice_identity: empty probe set");
    const QuasiDensity2D wd = decimate(w, 512);
    double zmax = 0.0;
    for (double z : zetas) zmax = std::max(zmax, std::abs(z));
    const BandSpectrum spec = padded_band_ft2(wd, zmax, zmax, kSlicePad);

    double worst = 0.0;
    for (int k = 0; k < nang; ++k) {
        const Direction d = fan_direction(k, nang);
        for (double z : zetas) {
            const double alpha = d.a * z, beta = d.b * z;
            const cd lhs = 2.0 * M_PI * spec.at_uv(alpha, beta);
            const cd rhs = characteristic_rhs(psi, alpha, beta);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

double verify_slice_identity(const WaveFunction& psi, const std::vector<double>& zetas,
                             int nang) {
    return verify_slice_identity(psi, make_verification_inputs(psi).w, zetas, nang);
}

Sinogram make_sinogram_quadrature(const WaveFunction& psi, int nang, const Grid1D& gz) {
    Sinogram s;
    s.gz = gz;
    s.nang = nang;
    s.values.assign(static_cast<std::size_t>(nang) * gz.n, 0.0);
    for (int k = 0; k < nang; ++k) {
        const Direction d = fan_direction(k, nang);
        const SignedDensity1D q = density_Z(psi, {d.a, d.b});
        for (int iz = 0; iz < gz.n; ++iz)
            s.values[static_cast<std::size_t>(k) * gz.n + iz] =
                lin_interp(q.grid, q.values, gz.point(iz));
    }
    return s;
}

Sinogram make_sinogram_pushforward(const QuasiDensity2D& w, int nang, const Grid1D& gz) {
    Sinogram s;
    s.gz = gz;
    s.nang = nang;
    s.values.assign(static_cast<std::size_t>(nang) * gz.n, 0.0);
    for (int k = 0; k < nang; ++k) {
        const SignedDensity1D pf = pushforward_density(w, fan_direction(k, nang), gz);
        std::copy(pf.values.begin(), pf.values.end(),
                  s.values.begin() + static_cast<std::size_t>(k) * gz.n);
    }
    return s;
}

QuasiDensity2D reconstruct_from_marginals(const Sinogram& s, const Grid2D& target,
                                          double* raw_mass) {
    if (s.nang < 8)
        throw std::invalid_argument("reconstruct_from_marginals: need at least 8 angles");

    // transform every slice on a zero-padded grid
    const Grid1D gzp(kReconPad * s.gz.n, kReconPad * s.gz.L);
    const Grid1D gzeta = gzp.recip();
    std::vector<std::vector<cd>> ghat(s.nang);
    {
        std::vector<cd> buf(gzp.n);
        const int lo = (gzp.n - s.gz.n) / 2;
        for (int k = 0; k < s.nang; ++k) {
            std::fill(buf.begin(), buf.end(), cd(0.0));
            for (int iz = 0; iz < s.gz.n; ++iz) buf[lo + iz] = cd(s.at(k, iz));
            ghat[k] = fourier_centered(gzp, buf, -1);
        }
    }

    // assemble the 2D characteristic function by the slice identity:
    // what(zeta a, zeta b) = ghat_theta(zeta)/sqrt(2pi)
    const Grid1D gxi = target.gx.recip();
    const Grid1D geta = target.gp.recip();
    const double zeta_max = gzeta.point(gzeta.n - 1);
    const double dth = M_PI / s.nang;
    std::vector<cd> what(static_cast<std::size_t>(gxi.n) * geta.n, cd(0.0));

    const double inv_s2pi = 1.0 / std::sqrt(2.0 * M_PI);
    for (int i = 0; i < gxi.n; ++i) {
        const double u = gxi.point(i);
        for (int j = 0; j < geta.n; ++j) {
            const double v = geta.point(j);
            const double rho = std::hypot(u, v);
            if (rho > zeta_max) continue;
            cd val;
            if (rho == 0.0) {
                val = cd(1.0 / (2.0 * M_PI));
            } else {
                double th = std::atan2(v, u);
                double zeta = rho;
                if (th < 0.0) { th += M_PI; zeta = -zeta; }
                if (th >= M_PI) { th -= M_PI; zeta = -zeta; } // atan2 folding edge
                const double t = th / dth;
                int k0 = static_cast<int>(std::floor(t));
                const double fr = t - k0;
                int k1 = k0 + 1;
                double z0 = zeta, z1 = zeta;
                if (k0 >= s.nang) { k0 -= s.nang; z0 = -z0; }
                if (k1 >= s.nang) { k1 -= s.nang; z1 = -z1; }
                val = ((1.0 - fr) * lin_interp(gzeta, ghat[k0], z0)
                       + fr * lin_interp(gzeta, ghat[k1], z1)) * inv_s2pi;
            }
            what[static_cast<std::size_t>(i) * geta.n + j] = val;
        }
    }

    // invert: backward transform along each axis
    QuasiDensity2D rec(target.gx, target.gp);
    {
        std::vector<cd> row(geta.n), col(gxi.n);
        std::vector<std::vector<cd>> tmp(gxi.n);
        for (int i = 0; i < gxi.n; ++i) {
            for (int j = 0; j < geta.n; ++j) row[j] = what[static_cast<std::size_t>(i) * geta.n + j];
            tmp[i] = fourier_centered(geta, row, +1);
        }
        for (int j = 0; j < target.gp.n; ++j) {
            for (int i = 0; i < gxi.n; ++i) col[i] = tmp[i][j];
            const std::vector<cd> out = fourier_centered(gxi, col, +1);
            for (int i = 0; i < target.gx.n; ++i) rec.at(i, j) = out[i].real();
        }
    }

    const double mass = integrate_2d(rec);
    if (raw_mass) *raw_mass = mass;
    for (auto& v : rec.values) v /= mass;
    return rec;
}

UniquenessResult uniqueness_probe(const WaveFunction& psi1, const WaveFunction& psi2, int nang) {
    if (!(psi1.grid == psi2.grid))
        throw std::invalid_argument("uniqueness_probe: states must share a grid");
    const VerificationInputs in1 = make_verification_inputs(psi1);
    const VerificationInputs in2 = make_verification_inputs(psi2);

    QuasiDensity2D diff(in1.w.gx, in1.w.gp);
    for (std::size_t k = 0; k < diff.values.size(); ++k)
        diff.values[k] = std::abs(in1.w.values[k] - in2.w.values[k]);

    UniquenessResult res;
    res.wigner_l1 = integrate_2d(diff);
    res.states_differ = res.wigner_l1 > 1e-3;

    const Grid1D gz = shared_z_grid(in1.w);
    std::vector<double> gap(gz.n);
    for (int k = 0; k < nang; ++k) {
        const Direction d = fan_direction(k, nang);
        const SignedDensity1D g1 = pushforward_density(in1.w, d, gz);
        const SignedDensity1D g2 = pushforward_density(in2.w, d, gz);
        for (int iz = 0; iz < gz.n; ++iz) gap[iz] = std::abs(g1.values[iz] - g2.values[iz]);
        const double l1 = trapezoid(gz, gap);
        if (l1 > res.max_marginal_gap) {
            res.max_marginal_gap = l1;
            res.gap_theta = k * M_PI / nang;
        }
    }
    return res;
}

} // namespace wignerlab
