#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wignerlab/grid.hpp"

#include <cmath>

using namespace wignerlab;

TEST_CASE("grid contract") {
    CHECK_THROWS_AS(Grid1D(6, 1.0), std::invalid_argument);  // not a power of two
    CHECK_THROWS_AS(Grid1D(4, 1.0), std::invalid_argument);  // too small
    CHECK_THROWS_AS(Grid1D(8, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(8, -2.0), std::invalid_argument);

    Grid1D g(8, 1.0);
    CHECK(g.step() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(g.point(0) == -1.0);
    CHECK(g.point(7) == doctest::Approx(0.75).epsilon(1e-15)); // half-open: +L excluded
    CHECK(g.points().size() == 8);
}

TEST_CASE("reciprocal grid") {
    Grid1D g(256, 12.0);
    Grid1D r = g.recip();
    CHECK(r.n == g.n);
    CHECK(r.L == doctest::Approx(M_PI * 256 / 24.0).epsilon(1e-15));
    // dx * dxi * n = 2 pi
    CHECK(g.step() * r.step() * g.n == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
    CHECK(r.recip() == g);
}

TEST_CASE("trapezoid halves the outermost samples") {
    Grid1D g(8, 1.0);
    std::vector<double> one(8, 1.0);
    // 7 full cells of width 1/4 minus the two half-samples: (8 - 1) * 0.25 = 1.75
    CHECK(trapezoid(g, one) == doctest::Approx(1.75).epsilon(1e-15));

    std::vector<cd> onec(8, cd(1.0, 2.0));
    cd tc = trapezoid(g, onec);
    CHECK(tc.real() == doctest::Approx(1.75).epsilon(1e-15));
    CHECK(tc.imag() == doctest::Approx(3.5).epsilon(1e-15));

    CHECK_THROWS_AS(trapezoid(g, std::vector<double>(7, 1.0)), std::invalid_argument);
}

TEST_CASE("linear interpolation") {
    Grid1D g(8, 1.0);
    std::vector<double> f(8);
    for (int k = 0; k < 8; ++k) f[k] = 3.0 * g.point(k) - 0.5; // linear: interp is exact
    CHECK(lin_interp(g, f, 0.1) == doctest::Approx(-0.2).epsilon(1e-14));
    CHECK(lin_interp(g, f, g.point(5)) == doctest::Approx(f[5]).epsilon(1e-15));
    CHECK(lin_interp(g, f, g.point(7)) == doctest::Approx(f[7]).epsilon(1e-15)); // last node
    CHECK(lin_interp(g, f, 0.76) == 0.0);  // beyond the last node
    CHECK(lin_interp(g, f, -1.01) == 0.0); // below the first node
}

TEST_CASE("bilinear interpolation is exact on bilinear data") {
    QuasiDensity2D w(Grid1D(16, 2.0), Grid1D(8, 1.0));
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 8; ++j) {
            const double x = w.gx.point(i), p = w.gp.point(j);
            w.at(i, j) = 2.0 + x - 0.5 * p + 0.25 * x * p;
        }
    auto f = [](double x, double p) { return 2.0 + x - 0.5 * p + 0.25 * x * p; };
    CHECK(interp_bilinear(w, 0.3, 0.41) == doctest::Approx(f(0.3, 0.41)).epsilon(1e-14));
    CHECK(interp_bilinear(w, -1.97, 0.6) == doctest::Approx(f(-1.97, 0.6)).epsilon(1e-13));
    CHECK(interp_bilinear(w, 5.0, 0.0) == 0.0); // outside the grid
}

TEST_CASE("2d integral of a product density") {
    Grid1D gx(32, 3.0), gp(16, 2.0);
    QuasiDensity2D w(gx, gp);
    std::vector<double> fx(gx.n), fp(gp.n);
    for (int i = 0; i < gx.n; ++i) fx[i] = std::exp(-gx.point(i) * gx.point(i));
    for (int j = 0; j < gp.n; ++j) fp[j] = 1.0 + 0.3 * gp.point(j);
    for (int i = 0; i < gx.n; ++i)
        for (int j = 0; j < gp.n; ++j) w.at(i, j) = fx[i] * fp[j];
    // product field: the iterated trapezoid factorizes
    CHECK(integrate_2d(w) ==
          doctest::Approx(trapezoid(gx, fx) * trapezoid(gp, fp)).epsilon(1e-14));
}
