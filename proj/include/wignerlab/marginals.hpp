#pragma once

#include "wignerlab/grid.hpp"

#include <utility>

namespace wignerlab {

// Phase-space direction z = a x + b p. Not both zero.
struct Direction {
    double a = 1.0, b = 0.0;
};

// Default evaluation grid for the pushforward along d: range |a|Lx + |b|Lp,
// point count of the x-grid.
Grid1D default_z_grid(const QuasiDensity2D& w, Direction d);

// Pushforward (image) density of w under (x, p) -> a x + b p, evaluated at the
// nodes of gz: g(z) = \int w restricted to the line a x + b p = z. Integrates
// along the better-conditioned axis with trapezoid weights and interpolates
// linearly in the other; axis directions reduce to exact row/column sums when
// the z-nodes land on grid nodes. Values outside the grid are treated as zero.
SignedDensity1D pushforward_density(const QuasiDensity2D& w, Direction d, const Grid1D& gz);

SignedDensity1D pushforward_density(const QuasiDensity2D& w, Direction d);

// \int_u^v of the piecewise-linear interpolant of g, with partial cells at the
// endpoints; the density is treated as zero outside the grid. Throws if u > v.
double interval_mass(const SignedDensity1D& g, double u, double v);

// Covariance of the pushforward under direction scaling: for c != 0 the mass of
// [u, v] under c*d must equal the mass of [u/c, v/c] under d (interval endpoints
// ordered). Returns the largest absolute mismatch over the supplied intervals.
double check_direction_scaling(const QuasiDensity2D& w, Direction d, double c,
                               const std::vector<std::pair<double, double>>& intervals);

} // namespace wignerlab
