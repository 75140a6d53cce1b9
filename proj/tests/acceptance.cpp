// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include "wignerlab/io.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace wignerlab;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string eng(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

struct CatalogEntry {
    std::string name;
    StateSpec spec;
    bool gaussian = false;
};

double run_sec(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(WIGNERLAB_BIN) + " " + args + " >/dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    return (st != -1 && WIFEXITED(st)) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

QuasiDensity2D ground_closed_form(int n, double L) {
    QuasiDensity2D w(Grid1D(n, L), Grid1D(n, L));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double x = w.gx.point(i), p = w.gp.point(j);
            w.at(i, j) = std::exp(-x * x - p * p) / M_PI;
        }
    return w;
}

} // namespace

int main() {
    const Grid1D grid(512, 12.0);
    const std::vector<CatalogEntry> catalog{
        {"gaussian(0,0,1)", {GaussianSpec{0.0, 0.0, 1.0}}, true},
        {"gaussian(1,-0.5,1)", {GaussianSpec{1.0, -0.5, 1.0}}, true},
        {"gaussian(0,0,2)", {GaussianSpec{0.0, 0.0, 2.0}}, true},
        {"fock(1)", {FockSpec{1}}, false},
        {"fock(2)", {FockSpec{2}}, false},
        {"cat(2,+)", {CatSpec{2.0, +1}}, false},
    };
    const std::vector<double> zetas{0.5, -0.5, 1.0, -1.0, 2.0, -2.0};

    Criterion c1, c2, c3, c4, c5, c6, c7, c8, c9;
    double c1_gauss = 0.0, c1_all = 0.0, c1_sec = 0.0;
    double c2_worst = 0.0, c3_worst = 0.0, c4_worst = 0.0, c4_raw = 0.0;
    double c5_mass = 0.0, c5_imag = 0.0;

    for (const CatalogEntry& entry : catalog) {
        const auto t0 = std::chrono::steady_clock::now();
        const WaveFunction psi = realize(entry.spec, grid);
        const VerificationInputs in = make_verification_inputs(psi);

        // 1. marginal agreement over the 36-angle fan
        const VerificationReport rep = verify_marginal_theorem(psi, in.w, 36);
        c1_sec += run_sec(t0);
        if (entry.gaussian) {
            c1_gauss = std::max(c1_gauss, rep.max_l1);
            c1.require(rep.max_l1 <= 1e-4, entry.name + " L1 " + eng(rep.max_l1));
        }
        c1_all = std::max(c1_all, rep.max_l1);
        c1.require(rep.max_l1 <= 1e-3, entry.name + " L1 " + eng(rep.max_l1));

        // 2. axis marginals against |psi|^2 and |psihat|^2
        {
            const SignedDensity1D mx = pushforward_density(in.w, {1.0, 0.0}, in.w.gx);
            double gx = 0.0;
            for (int k = 0; k < in.w.gx.n; ++k)
                gx = std::max(gx, std::abs(mx.values[k] - std::norm(in.psi_fine.values[k])));
            const SignedDensity1D mp = pushforward_density(in.w, {0.0, 1.0}, in.w.gp);
            const SignedDensity1D dp = density_Z(psi, {0.0, 1.0});
            double gp = 0.0;
            for (int k = 0; k < in.w.gp.n; ++k)
                gp = std::max(gp, std::abs(mp.values[k] -
                                           lin_interp(dp.grid, dp.values, in.w.gp.point(k))));
            c2_worst = std::max(c2_worst, std::max(gx, gp));
            c2.require(gx <= 1e-6, entry.name + " x-marginal " + eng(gx));
            c2.require(gp <= 1e-6, entry.name + " p-marginal " + eng(gp));
        }

        // 3. Fourier slice identity over zeta probes x 12 angles
        {
            const double se = verify_slice_identity(psi, in.w, zetas, 12);
            c3_worst = std::max(c3_worst, se);
            c3.require(se <= 1e-4, entry.name + " slice " + eng(se));
        }

        // 4. 180-angle tomographic reconstruction of the sinogram of w
        {
            const Grid1D gz(2048, 1.1 * std::hypot(in.w.gx.L, in.w.gp.L));
            const Sinogram sino = make_sinogram_pushforward(in.w, 180, gz);
            const Grid2D target{Grid1D(512, in.w.gx.L), Grid1D(512, in.w.gp.L)};
            double raw = 0.0;
            const QuasiDensity2D rec = reconstruct_from_marginals(sino, target, &raw);
            const int dx = in.w.gx.n / 512, dp = in.w.gp.n / 512;
            double gap = 0.0, wmax = 0.0;
            for (int i = 0; i < 512; ++i)
                for (int j = 0; j < 512; ++j) {
                    gap = std::max(gap, std::abs(rec.at(i, j) - in.w.at(i * dx, j * dp)));
                    wmax = std::max(wmax, std::abs(in.w.at(i * dx, j * dp)));
                }
            c4_worst = std::max(c4_worst, gap / wmax);
            c4_raw = std::max(c4_raw, std::abs(raw - 1.0));
            c4.require(gap / wmax <= 1e-3, entry.name + " recon " + eng(gap / wmax));
            c4.require(std::abs(raw - 1.0) <= 1e-4, entry.name + " raw mass " + eng(raw));
            if (entry.name == "fock(1)") {
                const double center = rec.at(256, 256); // x = p = 0
                c4.require(center < -0.25, "fock(1) w(0,0) " + eng(center));
            }
        }

        // 5. unit mass, real output
        {
            const double mass = integrate_2d(in.w);
            c5_mass = std::max(c5_mass, std::abs(mass - 1.0));
            c5_imag = std::max(c5_imag, std::abs(in.imag_residue));
            c5.require(std::abs(mass - 1.0) <= 1e-6, entry.name + " mass " + eng(mass));
            c5.require(std::abs(in.imag_residue) <= 1e-10,
                       entry.name + " imag " + eng(in.imag_residue));
        }

        // 8. negativity detection at the two poles of the catalog
        if (entry.name == "gaussian(0,0,1)") {
            const NegativityReport ng = negativity_report(in.w);
            c8.require(std::abs(ng.negative_mass) <= 1e-9,
                       "ground negative mass " + eng(ng.negative_mass));
        }
        if (entry.name == "fock(1)") {
            const NegativityReport nf = negativity_report(in.w);
            c8.require(std::abs(nf.min_value + 1.0 / M_PI) <= 1e-4,
                       "fock(1) min " + eng(nf.min_value));
        }
    }
    c1.require(c1_sec < 30.0, "sweep took " + eng(c1_sec) + " s");

    // 6. scaling lemmas
    {
        const WaveFunction psi = realize({GaussianSpec{1.0, -0.5, 1.0}}, Grid1D(256, 12.0));
        const QuasiDensity2D w = compute_wigner(psi, Grid1D(256, 12.0).recip());
        const double s = std::sqrt(0.5);
        const std::vector<std::pair<double, double>> iv{{-1.0, 1.0}, {0.3, 2.0}, {-2.5, -0.7}};
        double worst = 0.0;
        for (double c : {2.0, -1.0, 0.5}) {
            worst = std::max(worst, check_direction_scaling(w, {s, s}, c, iv));
            worst = std::max(worst, check_direction_scaling(w, {1.0, 0.0}, c, iv));
        }
        c6.require(worst <= 1e-5, "direction scaling " + eng(worst));

        const WaveFunction psif = realize({GaussianSpec{1.0, -0.5, 1.0}}, Grid1D(512, 12.0));
        const double a = 1.36, b = 1.7;
        const SignedDensity1D lhs = density_Z(psif, {a, b});
        const SignedDensity1D unit = density_Z(psif, {a / b, 1.0});
        double red = 0.0;
        for (int k = 0; k < lhs.grid.n; k += 17) {
            const double r = lhs.grid.point(k);
            if (std::abs(r / b) > unit.grid.point(unit.grid.n - 1)) continue;
            red = std::max(red, std::abs(lhs.values[k] -
                                         lin_interp(unit.grid, unit.values, r / b) / b));
        }
        c6.require(red <= 1e-8, "density rescaling " + eng(red));
        c6.detail = "scaling " + eng(worst) + ", rescaling " + eng(red);
    }

    // 7. brute-force oracles
    {
        // chirp route vs direct quadrature
        const WaveFunction psi = realize({GaussianSpec{0.6, -0.3, 1.2}}, Grid1D(256, 12.0));
        const double a = 0.8, b = -0.6, c = -a / b;
        const SignedDensity1D d = density_Z(psi, {a, b});
        double chirp_gap = 0.0;
        for (int m = -5; m <= 5; ++m) {
            const int k0 = d.grid.n / 2 + m * 499; // natural-grid nodes across the support
            const double r = d.grid.point(k0);
            std::vector<cd> f(psi.grid.n);
            for (int k = 0; k < psi.grid.n; ++k) {
                const double x = psi.grid.point(k);
                f[k] = psi.values[k] * std::exp(cd(0.0, -0.5 * c * x * x - (r / b) * x));
            }
            const double direct =
                std::norm(trapezoid(psi.grid, f) / std::sqrt(2.0 * M_PI)) / std::abs(b);
            chirp_gap = std::max(chirp_gap, std::abs(d.values[k0] - direct));
        }
        c7.require(chirp_gap <= 1e-8, "chirp vs direct " + eng(chirp_gap));

        // 2d transform vs the O(n^4) double sum
        QuasiDensity2D w8(Grid1D(8, 2.0), Grid1D(8, 1.5));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                const double x = w8.gx.point(i), p = w8.gp.point(j);
                w8.at(i, j) = std::exp(-x * x - p * p) + 0.1 * x * p;
            }
        const Spectrum2D sp = ft2d(w8);
        double ft_gap = 0.0;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                cd sum = 0.0;
                for (int k = 0; k < 8; ++k)
                    for (int l = 0; l < 8; ++l)
                        sum += w8.at(k, l) * std::exp(cd(0.0, -(sp.gxi.point(i) * w8.gx.point(k) +
                                                              sp.geta.point(j) * w8.gp.point(l))));
                sum *= w8.gx.step() * w8.gp.step() / (2.0 * M_PI);
                ft_gap = std::max(ft_gap, std::abs(sp.at(i, j) - sum));
            }
        c7.require(ft_gap <= 1e-12, "ft2d vs double sum " + eng(ft_gap));

        // pushforward vs cell binning, halving under refinement
        const double sq = std::sqrt(0.5);
        auto bin_gap = [&](int n) {
            const QuasiDensity2D w = ground_closed_form(n, 4.0);
            const Grid1D gz(n, 4.0 * std::sqrt(2.0));
            std::vector<double> hist(gz.n, 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const double z = sq * (w.gx.point(i) + w.gp.point(j));
                    // exact-edge cells belong to the right bin; see test_marginals
                    const int bix =
                        static_cast<int>(std::floor((z + gz.L) / gz.step() + 1e-9));
                    if (bix >= 0 && bix < gz.n)
                        hist[bix] += w.at(i, j) * w.gx.step() * w.gp.step() / gz.step();
                }
            const SignedDensity1D fine = pushforward_density(w, {sq, sq}, Grid1D(2 * n, gz.L));
            double gap = 0.0;
            for (int bix = 0; bix < gz.n; ++bix)
                gap = std::max(gap, std::abs(hist[bix] - fine.values[2 * bix + 1]));
            return gap;
        };
        const double g32 = bin_gap(32), g64 = bin_gap(64);
        c7.require(g32 <= 0.05, "binning gap " + eng(g32));
        c7.require(g64 <= 0.6 * g32, "binning refinement " + eng(g64 / g32));
        c7.detail = "chirp " + eng(chirp_gap) + ", ft2d " + eng(ft_gap) + ", binning " +
                    eng(g32) + " -> " + eng(g64);
    }

    // 9. CLI determinism and exit codes
    {
        const fs::path base = fs::temp_directory_path() / "wignerlab_acceptance";
        fs::remove_all(base);
        fs::create_directories(base);
        const fs::path cfg = base / "ground.json";
        std::ofstream(cfg) << R"({
  "state": {"kind": "gaussian", "x0": 0.0, "p0": 0.0, "sigma": 1.0},
  "grid": {"n": 256, "L": 12.0},
  "angles": 12
})";
        const fs::path bad = base / "bad.json";
        std::ofstream(bad) << "{ not json";

        const int e1 = run_cli("verify --config " + cfg.string() + " --out " + (base / "a").string());
        const int e2 = run_cli("verify --config " + cfg.string() + " --out " + (base / "b").string());
        c9.require(e1 == 0 && e2 == 0, "verify exits " + std::to_string(e1) + "," + std::to_string(e2));
        const std::string ra = slurp(base / "a" / "report.json");
        c9.require(!ra.empty() && ra == slurp(base / "b" / "report.json"),
                   "report.json not byte-identical");
        c9.require(run_cli("verify --config " + cfg.string() + " --corrupt-quadrant --out " +
                           (base / "c").string()) == 1,
                   "corrupted run must exit 1");
        c9.require(run_cli("verify --config " + bad.string()) == 2, "malformed config must exit 2");
        c9.require(run_cli("reconstruct --config " + cfg.string() + " --n 96") == 2,
                   "bad --n must exit 2");
    }

    c1.detail = "gaussians " + eng(c1_gauss) + ", all " + eng(c1_all) + ", " + eng(c1_sec) + " s";
    c2.detail = "worst " + eng(c2_worst);
    c3.detail = "worst " + eng(c3_worst);
    c4.detail = "worst rel " + eng(c4_worst) + ", raw-mass gap " + eng(c4_raw);
    c5.detail = "mass gap " + eng(c5_mass) + ", imag " + eng(c5_imag);
    c8.detail = c8.pass ? "ground ~0, fock(1) ~ -1/pi" : c8.detail;
    c9.detail = c9.pass ? "byte-identical reports; exit codes 0/1/2" : c9.detail;

    struct Row {
        const char* what;
        Criterion* c;
    };
    const Row rows[] = {
        {"1 marginal agreement, 36 angles, six states", &c1},
        {"2 axis marginals vs |psi|^2 and |psihat|^2", &c2},
        {"3 Fourier slice identity", &c3},
        {"4 180-angle tomographic reconstruction", &c4},
        {"5 unit mass and realness", &c5},
        {"6 scaling lemmas", &c6},
        {"7 brute-force oracle equivalence", &c7},
        {"8 negativity detection", &c8},
        {"9 CLI determinism and exit codes", &c9},
    };
    int failures = 0;
    for (const Row& r : rows) {
        const bool ok = r.c->pass;
        failures += ok ? 0 : 1;
        std::printf("[%s] criterion %s: %s\n", ok ? "PASS" : "FAIL", r.what,
                    r.c->detail.c_str());
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 9 criteria passed\n");
    return failures ? 1 : 0;
}
