#pragma once

#include "wignerlab/characterization.hpp"

#include <filesystem>
#include <string>

#include <json.hpp>

namespace wignerlab {

using ordered_json = nlohmann::ordered_json;

struct Tolerances {
    double l1 = 1e-4;
    double slice = 1e-4;
    double recon = 1e-3;
};

struct Config {
    StateSpec state;
    int n = 512;
    double L = 12.0;
    int angles = 36;
    Tolerances tol;
    std::string output_dir = "."; // --out on the command line takes precedence
};

// Thrown on malformed configuration input; the CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

StateSpec parse_state(const nlohmann::json& j, const std::filesystem::path& base_dir);
Config parse_config(const std::filesystem::path& path);

// Tabulated amplitude from a CSV file with columns x,re,im (one header line allowed).
SampledSpec load_sampled_csv(const std::filesystem::path& path);

// Shortest-exact decimal formatting is avoided on purpose: every float is
// printed with 17 significant digits so the round-trip is lossless and the
// bytes are reproducible across runs.
std::string format_double(double v);

void write_density_csv(const std::filesystem::path& path, const QuasiDensity2D& w,
                       const std::string& value_name);
void write_marginal_csv(const std::filesystem::path& path, const Grid1D& gz,
                        const std::vector<double>& pushforward,
                        const std::vector<double>& quantum);
void write_sinogram_csv(const std::filesystem::path& path, const Sinogram& s);

// 8-bit binary PGM; rows scan p from +max downward, columns scan x upward.
void write_pgm(const std::filesystem::path& path, const QuasiDensity2D& w);

void write_json(const std::filesystem::path& path, const ordered_json& j);

ordered_json grid_json(const Grid1D& gx, const Grid1D& gp);

} // namespace wignerlab
