#include "wignerlab/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <stdexcept>

namespace wignerlab {

namespace {

// One cached in-place FFTW plan per (size, direction). FFTW_ESTIMATE keeps the
// plan choice deterministic, so repeated runs produce byte-identical output.
class PlanCache {
public:
    void execute(std::vector<cd>& data, int fftw_sign) {
        const int n = static_cast<int>(data.size());
        auto key = std::make_pair(n, fftw_sign);
        auto it = plans_.find(key);
        if (it == plans_.end()) {
            Rec rec;
            rec.buf = fftw_alloc_complex(n);
            rec.plan = fftw_plan_dft_1d(n, rec.buf, rec.buf, fftw_sign, FFTW_ESTIMATE);
            it = plans_.emplace(key, rec).first;
        }
        Rec& rec = it->second;
        std::memcpy(rec.buf, data.data(), sizeof(cd) * n);
        fftw_execute(rec.plan);
        std::memcpy(data.data(), rec.buf, sizeof(cd) * n);
    }

    ~PlanCache() {
        for (auto& [key, rec] : plans_) {
            fftw_destroy_plan(rec.plan);
            fftw_free(rec.buf);
        }
    }

private:
    struct Rec {
        fftw_complex* buf = nullptr;
        fftw_plan plan = nullptr;
    };
    std::map<std::pair<int, int>, Rec> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

} // namespace

std::vector<cd> fourier_centered(const Grid1D& g, const std::vector<cd>& f, int sign) {
    if (static_cast<int>(f.size()) != g.n)
        throw std::invalid_argument("fourier_centered: size mismatch");
    if (g.n % 4 != 0)
        throw std::invalid_argument("fourier_centered: n % 4 != 0");
    std::vector<cd> a(g.n);
    for (int k = 0; k < g.n; ++k) a[k] = (k & 1) ? -f[k] : f[k];
    cache().execute(a, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
    const double s = g.step() / std::sqrt(2.0 * M_PI);
    for (int j = 0; j < g.n; ++j) a[j] = ((j & 1) ? -a[j] : a[j]) * s;
    return a;
}

WaveFunction ft1d(const WaveFunction& psi) {
    return {psi.grid.recip(), fourier_centered(psi.grid, psi.values, -1), psi.tail_warning};
}

WaveFunction ift1d(const WaveFunction& phi) {
    return {phi.grid.recip(), fourier_centered(phi.grid, phi.values, +1), phi.tail_warning};
}

WaveFunction chirp_ft(const WaveFunction& psi, double c) {
    WaveFunction tmp = psi;
    const double d = psi.grid.step();
    for (int k = 0; k < psi.grid.n; ++k) {
        const double x = -psi.grid.L + k * d;
        tmp.values[k] *= std::exp(cd(0.0, -0.5 * c * x * x));
    }
    return ft1d(tmp);
}

WaveFunction zero_embed(const WaveFunction& psi, int pad) {
    if (pad < 1 || (pad & (pad - 1)) != 0)
        throw std::invalid_argument("zero_embed: pad must be a power of two >= 1");
    if (pad == 1) return psi;
    const int n = psi.grid.n;
    WaveFunction out;
    out.grid = Grid1D(pad * n, pad * psi.grid.L);
    out.values.assign(static_cast<std::size_t>(pad) * n, cd(0.0));
    const int lo = (pad * n - n) / 2;
    std::copy(psi.values.begin(), psi.values.end(), out.values.begin() + lo);
    out.tail_warning = psi.tail_warning;
    return out;
}

WaveFunction supersample(const WaveFunction& psi, int s) {
    if (s < 1 || (s & (s - 1)) != 0)
        throw std::invalid_argument("supersample: factor must be a power of two >= 1");
    if (s == 1) return psi;
    const int n = psi.grid.n;
    std::vector<cd> F = fourier_centered(psi.grid, psi.values, -1);
    const Grid1D gr = psi.grid.recip();
    const Grid1D grb(s * n, s * gr.L); // same frequency spacing, wider band
    std::vector<cd> buf(static_cast<std::size_t>(s) * n, cd(0.0));
    const int lo = (s * n - n) / 2;
    std::copy(F.begin(), F.end(), buf.begin() + lo);
    WaveFunction out;
    out.grid = grb.recip(); // = Grid1D(s*n, psi.grid.L)
    out.values = fourier_centered(grb, buf, +1);
    out.tail_warning = psi.tail_warning;
    return out;
}

Spectrum2D ft2d(const QuasiDensity2D& w) {
    Spectrum2D out;
    out.gxi = w.gx.recip();
    out.geta = w.gp.recip();
    out.values.assign(static_cast<std::size_t>(w.gx.n) * w.gp.n, cd(0.0));
    // rows over p first, then columns over x; each pass carries step/sqrt(2pi),
    // so the product gives the 1/(2pi) prefactor
    std::vector<cd> row(w.gp.n);
    for (int i = 0; i < w.gx.n; ++i) {
        for (int j = 0; j < w.gp.n; ++j) row[j] = cd(w.at(i, j));
        row = fourier_centered(w.gp, row, -1);
        for (int j = 0; j < w.gp.n; ++j)
            out.values[static_cast<std::size_t>(i) * w.gp.n + j] = row[j];
    }
    std::vector<cd> col(w.gx.n);
    for (int j = 0; j < w.gp.n; ++j) {
        for (int i = 0; i < w.gx.n; ++i) col[i] = out.values[static_cast<std::size_t>(i) * w.gp.n + j];
        col = fourier_centered(w.gx, col, -1);
        for (int i = 0; i < w.gx.n; ++i) out.values[static_cast<std::size_t>(i) * w.gp.n + j] = col[i];
    }
    return out;
}

} // namespace wignerlab
