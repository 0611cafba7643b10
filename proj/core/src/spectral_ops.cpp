#include "dmkdv/spectral_ops.hpp"

#include <cmath>
#include <stdexcept>

#include "dmkdv/fft.hpp"

namespace dmkdv {

SpectralField forward_transform(const RealField& f) {
    const int n = f.grid.n;
    if (static_cast<int>(f.samples.size()) != n)
        throw std::invalid_argument("forward_transform: sample count != grid points");
    std::vector<cplx> in(n), out;
    for (int j = 0; j < n; ++j) in[j] = cplx{f.samples[j], 0.0};
    fft::forward(in, out);
    SpectralField g{f.grid, std::move(out)};
    for (auto& c : g.coeffs) c /= static_cast<double>(n);
    return g;
}

RealField inverse_transform(const SpectralField& f) {
    const double defect = hermitian_defect(f);
    const double tol = 1e-9 * std::max(1.0, linf_coeff(f));
    if (defect > tol)
        throw std::invalid_argument("inverse_transform: Hermitian symmetry violated");
    std::vector<cplx> out;
    fft::backward(f.coeffs, out);
    RealField r{f.grid, std::vector<double>(f.grid.n)};
    for (int j = 0; j < f.grid.n; ++j) r.samples[j] = out[j].real();
    return r;
}

SpectralField apply_multiplier(const SpectralField& f, const std::function<cplx(double)>& symbol) {
    SpectralField g = f;
    for (int bin = 0; bin < f.grid.n; ++bin) {
        const cplx s = symbol(f.grid.wavenumber(bin));
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
            throw std::invalid_argument("apply_multiplier: non-finite symbol value");
        g.coeffs[bin] *= s;
    }
    return g;
}

SpectralField spectral_derivative(const SpectralField& f) {
    SpectralField g = f;
    for (int bin = 0; bin < f.grid.n; ++bin) {
        g.coeffs[bin] *= cplx{0.0, f.grid.wavenumber(bin)};
    }
    g.coeffs[f.grid.nyquist_bin()] = 0.0;
    return g;
}

SpectralField pad_modes(const SpectralField& f, int factor) {
    if (factor < 1) throw std::invalid_argument("pad_modes: factor must be >= 1");
    const int n = f.grid.n;
    const int np = n * factor;
    SpectralField g = make_spectral_field(PeriodicGrid{np, f.grid.length});
    for (int bin = 0; bin < n; ++bin) {
        g.coeffs[g.grid.bin_of_mode(f.grid.mode_index(bin))] = f.coeffs[bin];
    }
    return g;
}

SpectralField truncate_modes(const SpectralField& f, int n) {
    if (n > f.grid.n) throw std::invalid_argument("truncate_modes: target larger than source");
    SpectralField g = make_spectral_field(PeriodicGrid{n, f.grid.length});
    for (int bin = 0; bin < n; ++bin) {
        const int k = g.grid.mode_index(bin);
        g.coeffs[bin] = f.coeffs[f.grid.bin_of_mode(k)];
    }
    return g;
}

SpectralField dealiased_triple_product(const SpectralField& f, const SpectralField& g,
                                       const SpectralField& h) {
    if (!(f.grid == g.grid) || !(f.grid == h.grid))
        throw std::invalid_argument("dealiased_triple_product: grid mismatch");
    const int n = f.grid.n;
    const int np = 2 * n; // cubic product: padding factor 2
    const SpectralField fp = pad_modes(f, 2), gp = pad_modes(g, 2), hp = pad_modes(h, 2);
    std::vector<cplx> af, ag, ah;
    fft::backward(fp.coeffs, af);
    fft::backward(gp.coeffs, ag);
    fft::backward(hp.coeffs, ah);
    std::vector<cplx> prod(np);
    for (int j = 0; j < np; ++j) prod[j] = af[j] * ag[j] * ah[j];
    std::vector<cplx> spec;
    fft::forward(prod, spec);
    SpectralField full{PeriodicGrid{np, f.grid.length}, std::move(spec)};
    for (auto& c : full.coeffs) c /= static_cast<double>(np);
    return truncate_modes(full, n);
}

SpectralField dealiased_cube(const SpectralField& f) { return dealiased_triple_product(f, f, f); }

} // namespace dmkdv
