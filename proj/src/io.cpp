#include "wignerlab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace wignerlab {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ConfigError(std::string("config: missing or non-numeric field '") + key + "'");
    return j[key].get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number())
        throw ConfigError(std::string("config: field '") + key + "' must be a number");
    return j[key].get<double>();
}

} // namespace

StateSpec parse_state(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ConfigError("config: state needs a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();

    if (kind == "gaussian") {
        GaussianSpec g;
        g.x0 = number_or(j, "x0", 0.0);
        g.p0 = number_or(j, "p0", 0.0);
        g.sigma = number_or(j, "sigma", 1.0);
        if (!(g.sigma > 0.0)) throw ConfigError("config: gaussian sigma must be positive");
        return {g};
    }
    if (kind == "fock") {
        const double n = require_number(j, "n");
        if (n != std::floor(n) || n < 0 || n > 20)
            throw ConfigError("config: fock n must be an integer in [0, 20]");
        return {FockSpec{static_cast<int>(n)}};
    }
    if (kind == "cat") {
        CatSpec c;
        c.alpha = require_number(j, "alpha");
        if (!j.contains("parity") || !j["parity"].is_string())
            throw ConfigError("config: cat needs parity \"+\" or \"-\"");
        const std::string p = j["parity"].get<std::string>();
        if (p != "+" && p != "-") throw ConfigError("config: cat parity must be \"+\" or \"-\"");
        c.parity = (p == "+") ? +1 : -1;
        return {c};
    }
    if (kind == "superposition") {
        if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty())
            throw ConfigError("config: superposition needs a non-empty 'terms' array");
        SuperpositionSpec sp;
        for (const auto& t : j["terms"]) {
            if (!t.is_object() || !t.contains("coeff") || !t.contains("state"))
                throw ConfigError("config: each term needs 'coeff' and 'state'");
            cd coeff;
            const auto& c = t["coeff"];
            if (c.is_number()) coeff = cd(c.get<double>());
            else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number())
                coeff = cd(c[0].get<double>(), c[1].get<double>());
            else
                throw ConfigError("config: coeff must be a number or [re, im]");
            sp.terms.emplace_back(coeff, std::make_shared<const StateSpec>(
                                             parse_state(t["state"], base_dir)));
        }
        return {sp};
    }
    if (kind == "sampled") {
        if (!j.contains("path") || !j["path"].is_string())
            throw ConfigError("config: sampled state needs a 'path'");
        std::filesystem::path p = j["path"].get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        return {load_sampled_csv(p)};
    }
    throw ConfigError("config: unknown state kind '" + kind + "'");
}

Config parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("state"))
        throw ConfigError("config: top-level object with a 'state' field required");

    Config cfg;
    cfg.state = parse_state(j["state"], path.parent_path());
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        if (!g.is_object()) throw ConfigError("config: 'grid' must be an object");
        const double n = number_or(g, "n", cfg.n);
        if (n != std::floor(n) || n < 64 || (static_cast<int>(n) & (static_cast<int>(n) - 1)) != 0)
            throw ConfigError("config: grid n must be a power of two >= 64");
        cfg.n = static_cast<int>(n);
        cfg.L = number_or(g, "L", cfg.L);
        if (!(cfg.L > 0.0)) throw ConfigError("config: grid L must be positive");
    }
    if (j.contains("angles")) {
        const double a = j["angles"].is_number() ? j["angles"].get<double>() : -1.0;
        if (a != std::floor(a) || a < 1)
            throw ConfigError("config: angles must be a positive integer");
        cfg.angles = static_cast<int>(a);
    }
    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        if (!t.is_object()) throw ConfigError("config: 'tolerances' must be an object");
        cfg.tol.l1 = number_or(t, "l1", cfg.tol.l1);
        cfg.tol.slice = number_or(t, "slice", cfg.tol.slice);
        cfg.tol.recon = number_or(t, "recon", cfg.tol.recon);
        if (!(cfg.tol.l1 > 0.0 && cfg.tol.slice > 0.0 && cfg.tol.recon > 0.0))
            throw ConfigError("config: tolerances must be positive");
    }
    if (j.contains("output_dir")) {
        if (!j["output_dir"].is_string())
            throw ConfigError("config: output_dir must be a string");
        cfg.output_dir = j["output_dir"].get<std::string>();
    }
    return cfg;
}

SampledSpec load_sampled_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("sampled: cannot open " + path.string());
    SampledSpec s;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string fx, fre, fim;
        if (!std::getline(ls, fx, ',') || !std::getline(ls, fre, ',') || !std::getline(ls, fim, ','))
            throw ConfigError("sampled: expected three comma-separated columns in " + path.string());
        try {
            const double x = std::stod(fx);
            const double re = std::stod(fre);
            const double im = std::stod(fim);
            s.x.push_back(x);
            s.values.emplace_back(re, im);
        } catch (const std::exception&) {
            if (s.x.empty() && fx == "x") continue; // header line
            throw ConfigError("sampled: non-numeric row in " + path.string());
        }
    }
    if (s.x.size() < 2) throw ConfigError("sampled: need at least two rows in " + path.string());
    return s;
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_density_csv(const std::filesystem::path& path, const QuasiDensity2D& w,
                       const std::string& value_name) {
    std::ofstream out(path, std::ios::binary);
    out << "x,p," << value_name << "\n";
    for (int i = 0; i < w.gx.n; ++i) {
        const std::string xs = format_double(w.gx.point(i));
        for (int j = 0; j < w.gp.n; ++j)
            out << xs << ',' << format_double(w.gp.point(j)) << ',' << format_double(w.at(i, j))
                << '\n';
    }
}

void write_marginal_csv(const std::filesystem::path& path, const Grid1D& gz,
                        const std::vector<double>& pushforward,
                        const std::vector<double>& quantum) {
    std::ofstream out(path, std::ios::binary);
    out << "z,pushforward,quantum\n";
    for (int k = 0; k < gz.n; ++k)
        out << format_double(gz.point(k)) << ',' << format_double(pushforward[k]) << ','
            << format_double(quantum[k]) << '\n';
}

void write_sinogram_csv(const std::filesystem::path& path, const Sinogram& s) {
    std::ofstream out(path, std::ios::binary);
    out << "angle,r,g\n";
    for (int k = 0; k < s.nang; ++k) {
        const std::string ang = format_double(k * 180.0 / s.nang);
        for (int iz = 0; iz < s.gz.n; ++iz)
            out << ang << ',' << format_double(s.gz.point(iz)) << ',' << format_double(s.at(k, iz))
                << '\n';
    }
}

void write_pgm(const std::filesystem::path& path, const QuasiDensity2D& w) {
    double lo = w.values[0], hi = w.values[0];
    for (double v : w.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi > lo ? hi - lo : 1.0;
    std::ofstream out(path, std::ios::binary);
    out << "P5\n" << w.gx.n << ' ' << w.gp.n << "\n255\n";
    std::vector<unsigned char> row(w.gx.n);
    for (int j = w.gp.n - 1; j >= 0; --j) { // top row = largest p
        for (int i = 0; i < w.gx.n; ++i)
            row[i] = static_cast<unsigned char>(std::lround(255.0 * (w.at(i, j) - lo) / span));
        out.write(reinterpret_cast<const char*>(row.data()), row.size());
    }
}

void write_json(const std::filesystem::path& path, const ordered_json& j) {
    std::ofstream out(path, std::ios::binary);
    out << j.dump(2) << '\n';
}

ordered_json grid_json(const Grid1D& gx, const Grid1D& gp) {
    return ordered_json{{"nx", gx.n}, {"Lx", gx.L}, {"np", gp.n}, {"Lp", gp.L}};
}

} // namespace wignerlab
