#include "wignerlab/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

namespace {

using namespace wignerlab;
namespace fs = std::filesystem;

std::string describe(const StateSpec& s) {
    return std::visit(
        [](const auto& sp) -> std::string {
            using T = std::decay_t<decltype(sp)>;
            if constexpr (std::is_same_v<T, GaussianSpec>)
                return "gaussian(x0=" + format_double(sp.x0) + ", p0=" + format_double(sp.p0) +
                       ", sigma=" + format_double(sp.sigma) + ")";
            else if constexpr (std::is_same_v<T, FockSpec>)
                return "fock(" + std::to_string(sp.n) + ")";
            else if constexpr (std::is_same_v<T, CatSpec>)
                return std::string("cat(alpha=") + format_double(sp.alpha) +
                       (sp.parity > 0 ? ", +)" : ", -)");
            else if constexpr (std::is_same_v<T, SuperpositionSpec>)
                return "superposition(" + std::to_string(sp.terms.size()) + " terms)";
            else
                return "sampled(" + std::to_string(sp.x.size()) + " points)";
        },
        s.spec);
}

struct CommonArgs {
    std::string config_path;
    std::string out_dir; // empty: use the config's output_dir
    int n_override = 0;
    double L_override = 0.0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "configuration JSON")->required();
    cmd->add_option("--out", args.out_dir, "output directory (created if missing)");
    cmd->add_option("--n", args.n_override, "override grid point count");
    cmd->add_option("--L", args.L_override, "override grid half-width");
}

Config load(const CommonArgs& args) {
    Config cfg = parse_config(args.config_path);
    if (args.n_override) {
        if (args.n_override < 64 || (args.n_override & (args.n_override - 1)) != 0)
            throw ConfigError("--n must be a power of two >= 64");
        cfg.n = args.n_override;
    }
    if (args.L_override != 0.0) {
        if (!(args.L_override > 0.0)) throw ConfigError("--L must be positive");
        cfg.L = args.L_override;
    }
    return cfg;
}

fs::path prepare_out(const CommonArgs& args, const Config& cfg) {
    fs::path dir(args.out_dir.empty() ? cfg.output_dir : args.out_dir);
    fs::create_directories(dir);
    return dir;
}

WaveFunction realize_checked(const Config& cfg) {
    WaveFunction psi = realize(cfg.state, Grid1D(cfg.n, cfg.L));
    if (psi.tail_warning)
        std::cerr << "warning: state amplitude has not decayed at the grid boundary; "
                     "results may be truncated (increase L)\n";
    return psi;
}

int cmd_wigner(const CommonArgs& args) {
    const Config cfg = load(args);
    const fs::path out = prepare_out(args, cfg);
    const WaveFunction psi = realize_checked(cfg);

    double imag = 0.0;
    const QuasiDensity2D w = compute_wigner(psi, psi.grid.recip(), &imag);
    const double mass = integrate_2d(w);
    const NegativityReport neg = negativity_report(w);

    write_density_csv(out / "w.csv", w, "w");
    write_pgm(out / "w.pgm", w);

    double lo = w.values[0], hi = w.values[0];
    for (double v : w.values) { lo = std::min(lo, v); hi = std::max(hi, v); }
    ordered_json meta{{"grid", grid_json(w.gx, w.gp)},
                      {"min", lo},
                      {"max", hi},
                      {"pixel_map", "byte = round(255*(w - min)/(max - min))"},
                      {"orientation", "rows: p descending; columns: x ascending"}};
    write_json(out / "w.meta.json", meta);

    ordered_json summary{{"state", describe(cfg.state)},
                         {"grid", grid_json(w.gx, w.gp)},
                         {"mass", mass},
                         {"mass_error", mass - 1.0},
                         {"imag_residue", imag},
                         {"tail_warning", psi.tail_warning},
                         {"negativity",
                          ordered_json{{"min_value", neg.min_value},
                                       {"negative_mass", neg.negative_mass},
                                       {"negative_area", neg.negative_area}}}};
    write_json(out / "summary.json", summary);
    return 0;
}

int cmd_verify(const CommonArgs& args, bool corrupt_quadrant) {
    const Config cfg = load(args);
    const fs::path out = prepare_out(args, cfg);
    const WaveFunction psi = realize_checked(cfg);

    VerificationInputs in = make_verification_inputs(psi);
    if (corrupt_quadrant) {
        for (int i = 0; i < in.w.gx.n; ++i)
            for (int j = 0; j < in.w.gp.n; ++j)
                if (in.w.gx.point(i) > 0.0 && in.w.gp.point(j) > 0.0) in.w.at(i, j) = -in.w.at(i, j);
    }

    const VerificationReport rep = verify_marginal_theorem(psi, in.w, cfg.angles);
    const std::vector<double> zetas{0.5, -0.5, 1.0, -1.0, 2.0, -2.0};
    const double slice = verify_slice_identity(psi, in.w, zetas, 12);
    const double mass = integrate_2d(in.w);

    ordered_json marg = ordered_json::array();
    ordered_json failing = ordered_json::array();
    for (const AngleRecord& r : rep.angles) {
        const double deg = r.theta * 180.0 / M_PI;
        marg.push_back(ordered_json{{"theta_deg", deg},
                                    {"a", r.d.a},
                                    {"b", r.d.b},
                                    {"l1", r.l1_gap},
                                    {"linf", r.linf_gap}});
        if (r.l1_gap > cfg.tol.l1) failing.push_back(deg);
    }
    const bool pass = rep.max_l1 <= cfg.tol.l1 && slice <= cfg.tol.slice;

    ordered_json report{{"state", describe(cfg.state)},
                        {"grid", ordered_json{{"n", cfg.n}, {"L", cfg.L}}},
                        {"angles", cfg.angles},
                        {"zetas", zetas},
                        {"tolerances",
                         ordered_json{{"l1", cfg.tol.l1}, {"slice", cfg.tol.slice}}},
                        {"wigner_mass_error", mass - 1.0},
                        {"wigner_imag_residue", in.imag_residue},
                        {"marginals", marg},
                        {"max_l1", rep.max_l1},
                        {"max_linf", rep.max_linf},
                        {"slice_max_error", slice},
                        {"failing_angles_deg", failing},
                        {"pass", pass}};
    write_json(out / "report.json", report);

    std::cout << (pass ? "PASS" : "FAIL") << " max_l1=" << format_double(rep.max_l1)
              << " slice=" << format_double(slice) << "\n";
    return pass ? 0 : 1;
}

int cmd_marginal(const CommonArgs& args, double angle_deg) {
    const Config cfg = load(args);
    const fs::path out = prepare_out(args, cfg);
    const WaveFunction psi = realize_checked(cfg);

    double folded = std::fmod(angle_deg, 180.0);
    if (folded < 0.0) folded += 180.0;
    Direction d;
    if (folded == 0.0) d = {1.0, 0.0};
    else if (folded == 90.0) d = {0.0, 1.0};
    else {
        const double th = folded * M_PI / 180.0;
        d = {std::cos(th), std::sin(th)};
    }

    const VerificationInputs in = make_verification_inputs(psi);
    const Grid1D gz = Grid1D(in.w.gx.n, std::abs(d.a) * in.w.gx.L + std::abs(d.b) * in.w.gp.L);
    const SignedDensity1D pf = pushforward_density(in.w, d, gz);
    const SignedDensity1D q = density_Z(psi, {d.a, d.b});

    std::vector<double> quantum(gz.n), diff(gz.n);
    double linf = 0.0;
    for (int iz = 0; iz < gz.n; ++iz) {
        quantum[iz] = lin_interp(q.grid, q.values, gz.point(iz));
        diff[iz] = std::abs(pf.values[iz] - quantum[iz]);
        linf = std::max(linf, diff[iz]);
    }
    const double l1 = trapezoid(gz, diff);

    write_marginal_csv(out / "marginal.csv", gz, pf.values, quantum);
    ordered_json rep{{"state", describe(cfg.state)},
                     {"angle_deg", angle_deg},
                     {"a", d.a},
                     {"b", d.b},
                     {"l1_gap", l1},
                     {"linf_gap", linf}};
    write_json(out / "marginal.json", rep);
    std::cout << "l1_gap=" << format_double(l1) << "\n";
    return 0;
}

int cmd_reconstruct(const CommonArgs& args) {
    const Config cfg = load(args);
    if (cfg.angles < 8) throw ConfigError("reconstruct: need at least 8 angles");
    const fs::path out = prepare_out(args, cfg);
    const WaveFunction psi = realize_checked(cfg);

    const VerificationInputs in = make_verification_inputs(psi);
    const Grid1D gz(in.w.gx.n, 1.1 * std::hypot(in.w.gx.L, in.w.gp.L));
    const Sinogram sino = make_sinogram_quadrature(psi, cfg.angles, gz);

    const int tn_x = std::min(512, in.w.gx.n);
    const int tn_p = std::min(512, in.w.gp.n);
    const Grid2D target{Grid1D(tn_x, in.w.gx.L), Grid1D(tn_p, in.w.gp.L)};
    double raw_mass = 0.0;
    const QuasiDensity2D rec = reconstruct_from_marginals(sino, target, &raw_mass);

    // compare against the directly computed distribution on the same nodes
    const int dx = in.w.gx.n / tn_x, dp = in.w.gp.n / tn_p;
    double werr = 0.0, wmax = 0.0;
    for (int i = 0; i < tn_x; ++i)
        for (int j = 0; j < tn_p; ++j) {
            werr = std::max(werr, std::abs(rec.at(i, j) - in.w.at(i * dx, j * dp)));
            wmax = std::max(wmax, std::abs(in.w.at(i * dx, j * dp)));
        }

    write_sinogram_csv(out / "sinogram.csv", sino);
    write_density_csv(out / "recon.csv", rec, "w");
    write_pgm(out / "recon.pgm", rec);

    const bool within = werr / wmax <= cfg.tol.recon;
    ordered_json rep{{"state", describe(cfg.state)},
                     {"angles", cfg.angles},
                     {"grid", grid_json(rec.gx, rec.gp)},
                     {"mass_before_renormalization", raw_mass},
                     {"mass_error_before_renormalization", raw_mass - 1.0},
                     {"max_abs_error", werr},
                     {"relative_max_error", werr / wmax},
                     {"tolerance", cfg.tol.recon},
                     {"within_tolerance", within}};
    write_json(out / "recon_report.json", rep);
    std::cout << (within ? "PASS" : "FAIL") << " relative_max_error=" << format_double(werr / wmax)
              << "\n";
    return within ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wignerlab: Wigner quasidistributions, directional marginals, "
                 "quadrature densities, and tomographic verification"};
    app.require_subcommand(1);

    CommonArgs wa, va, ma, ra;
    bool corrupt = false;
    double angle_deg = 45.0;

    CLI::App* cw = app.add_subcommand("wigner", "compute the Wigner function");
    add_common(cw, wa);
    CLI::App* cv = app.add_subcommand("verify", "check marginal and slice identities");
    add_common(cv, va);
    cv->add_flag("--corrupt-quadrant", corrupt)->group(""); // internal fault-injection hook
    CLI::App* cm = app.add_subcommand("marginal", "single-direction marginal comparison");
    add_common(cm, ma);
    cm->add_option("--angle", angle_deg, "direction angle in degrees")->required();
    CLI::App* cr = app.add_subcommand("reconstruct", "tomographic reconstruction from quadrature slices");
    add_common(cr, ra);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (cw->parsed()) return cmd_wigner(wa);
        if (cv->parsed()) return cmd_verify(va, corrupt);
        if (cm->parsed()) return cmd_marginal(ma, angle_deg);
        if (cr->parsed()) return cmd_reconstruct(ra);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
