#pragma once

#include "wignerlab/spectral.hpp"

#include <memory>
#include <utility>
#include <variant>

namespace wignerlab {

struct StateSpec;

struct GaussianSpec {
    double x0 = 0.0, p0 = 0.0, sigma = 1.0;
};

struct FockSpec {
    int n = 0; // 0..20
};

struct CatSpec {
    double alpha = 2.0;
    int parity = +1; // +1 or -1
};

struct SuperpositionSpec {
    std::vector<std::pair<cd, std::shared_ptr<const StateSpec>>> terms;
};

// Tabulated amplitude psi(x_i); resampled linearly onto the target grid.
struct SampledSpec {
    std::vector<double> x;
    std::vector<cd> values;
};

struct StateSpec {
    std::variant<GaussianSpec, FockSpec, CatSpec, SuperpositionSpec, SampledSpec> spec;
};

// Sample the state on the grid, normalize to unit L2 mass (trapezoid), and fix
// the global phase so the largest-modulus sample (first index on ties) is real
// and positive. Sets tail_warning when the outermost samples exceed 1e-8 of the
// peak modulus. Throws on vanishing norm.
WaveFunction realize(const StateSpec& s, const Grid1D& g);

// <a|b>, conjugate-linear in the first argument.
cd inner(const WaveFunction& a, const WaveFunction& b);

double norm(const WaveFunction& psi);

// Normalized Hermite function h_n(x) (harmonic-oscillator eigenstate, hbar = 1).
double hermite_fn(int n, double x);

} // namespace wignerlab
