#include "wignerlab/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wignerlab {

namespace {

std::vector<cd> sample_unnormalized(const StateSpec& s, const Grid1D& g);

std::vector<cd> sample_gaussian(const GaussianSpec& gs, const Grid1D& g) {
    if (!(gs.sigma > 0.0))
        throw std::invalid_argument("gaussian: sigma must be positive");
    std::vector<cd> v(g.n);
    const double norm = std::pow(M_PI * gs.sigma * gs.sigma, -0.25);
    for (int k = 0; k < g.n; ++k) {
        const double x = g.point(k);
        const double u = (x - gs.x0) / gs.sigma;
        v[k] = norm * std::exp(-0.5 * u * u) * std::exp(cd(0.0, gs.p0 * x));
    }
    return v;
}

std::vector<cd> sample_fock(const FockSpec& fs, const Grid1D& g) {
    if (fs.n < 0 || fs.n > 20)
        throw std::invalid_argument("fock: n must be in [0, 20]");
    std::vector<cd> v(g.n);
    for (int k = 0; k < g.n; ++k) v[k] = cd(hermite_fn(fs.n, g.point(k)));
    return v;
}

std::vector<cd> sample_cat(const CatSpec& cs, const Grid1D& g) {
    if (cs.parity != 1 && cs.parity != -1)
        throw std::invalid_argument("cat: parity must be +1 or -1");
    std::vector<cd> plus = sample_gaussian({cs.alpha, 0.0, 1.0}, g);
    std::vector<cd> minus = sample_gaussian({-cs.alpha, 0.0, 1.0}, g);
    for (int k = 0; k < g.n; ++k)
        plus[k] += static_cast<double>(cs.parity) * minus[k];
    return plus;
}

std::vector<cd> sample_superposition(const SuperpositionSpec& sp, const Grid1D& g) {
    if (sp.terms.empty())
        throw std::invalid_argument("superposition: no terms");
    std::vector<cd> acc(g.n, cd(0.0));
    for (const auto& [coeff, term] : sp.terms) {
        if (!term) throw std::invalid_argument("superposition: null term");
        // combine *normalized* components so the coefficients mean what they say
        WaveFunction w = realize(*term, g);
        for (int k = 0; k < g.n; ++k) acc[k] += coeff * w.values[k];
    }
    return acc;
}

std::vector<cd> sample_tabulated(const SampledSpec& ss, const Grid1D& g) {
    if (ss.x.size() != ss.values.size() || ss.x.size() < 2)
        throw std::invalid_argument("sampled: need at least two (x, value) pairs");
    if (!std::is_sorted(ss.x.begin(), ss.x.end()))
        throw std::invalid_argument("sampled: x must be strictly increasing");
    std::vector<cd> v(g.n, cd(0.0));
    for (int k = 0; k < g.n; ++k) {
        const double x = g.point(k);
        if (x < ss.x.front() || x > ss.x.back()) continue;
        auto it = std::upper_bound(ss.x.begin(), ss.x.end(), x);
        std::size_t j = (it == ss.x.begin()) ? 0 : (it - ss.x.begin() - 1);
        if (j + 1 >= ss.x.size()) j = ss.x.size() - 2;
        const double t = (x - ss.x[j]) / (ss.x[j + 1] - ss.x[j]);
        v[k] = (1.0 - t) * ss.values[j] + t * ss.values[j + 1];
    }
    return v;
}

std::vector<cd> sample_unnormalized(const StateSpec& s, const Grid1D& g) {
    return std::visit(
        [&](const auto& sp) -> std::vector<cd> {
            using T = std::decay_t<decltype(sp)>;
            if constexpr (std::is_same_v<T, GaussianSpec>) return sample_gaussian(sp, g);
            else if constexpr (std::is_same_v<T, FockSpec>) return sample_fock(sp, g);
            else if constexpr (std::is_same_v<T, CatSpec>) return sample_cat(sp, g);
            else if constexpr (std::is_same_v<T, SuperpositionSpec>) return sample_superposition(sp, g);
            else return sample_tabulated(sp, g);
        },
        s.spec);
}

} // namespace

double hermite_fn(int n, double x) {
    const double h0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
    if (n == 0) return h0;
    double hm = h0;
    double h = std::sqrt(2.0) * x * h0;
    for (int k = 2; k <= n; ++k) {
        const double hn = std::sqrt(2.0 / k) * x * h - std::sqrt((k - 1.0) / k) * hm;
        hm = h;
        h = hn;
    }
    return h;
}

WaveFunction realize(const StateSpec& s, const Grid1D& g) {
    WaveFunction psi;
    psi.grid = g;
    psi.values = sample_unnormalized(s, g);

    std::vector<double> dens(g.n);
    for (int k = 0; k < g.n; ++k) dens[k] = std::norm(psi.values[k]);
    const double mass = trapezoid(g, dens);
    if (!(mass > 1e-300))
        throw std::runtime_error("realize: state has vanishing norm on this grid");
    const double scale = 1.0 / std::sqrt(mass);
    for (auto& v : psi.values) v *= scale;

    // deterministic global phase
    int kmax = 0;
    double best = -1.0;
    for (int k = 0; k < g.n; ++k) {
        const double m = std::abs(psi.values[k]);
        if (m > best) { best = m; kmax = k; }
    }
    const cd phase = psi.values[kmax] / best;
    for (auto& v : psi.values) v /= phase;

    const double edge = std::max(std::max(std::abs(psi.values[0]), std::abs(psi.values[1])),
                                 std::max(std::abs(psi.values[g.n - 1]), std::abs(psi.values[g.n - 2])));
    psi.tail_warning = edge > 1e-8 * best;
    return psi;
}

cd inner(const WaveFunction& a, const WaveFunction& b) {
    if (!(a.grid == b.grid))
        throw std::invalid_argument("inner: grids differ");
    std::vector<cd> prod(a.grid.n);
    for (int k = 0; k < a.grid.n; ++k) prod[k] = std::conj(a.values[k]) * b.values[k];
    return trapezoid(a.grid, prod);
}

double norm(const WaveFunction& psi) {
    std::vector<double> dens(psi.grid.n);
    for (int k = 0; k < psi.grid.n; ++k) dens[k] = std::norm(psi.values[k]);
    return std::sqrt(trapezoid(psi.grid, dens));
}

} // namespace wignerlab
