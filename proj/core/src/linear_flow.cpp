#include "dmkdv/linear_flow.hpp"

#include <cmath>
#include <stdexcept>

namespace dmkdv {

LinearSymbol make_symbol(double alpha) {
    if (!(alpha > 0.0) || alpha > 3.0)
        throw std::invalid_argument("LinearSymbol: alpha must lie in (0, 3]");
    return LinearSymbol{alpha};
}

SpectralField apply_airy(const SpectralField& f, double t) {
    SpectralField g = f;
    for (int bin = 0; bin < f.grid.n; ++bin) {
        const double xi = f.grid.wavenumber(bin);
        g.coeffs[bin] *= std::polar(1.0, t * xi * xi * xi);
    }
    return g;
}

SpectralField apply_semigroup(const SpectralField& f, double t, const LinearSymbol& sym) {
    SpectralField g = f;
    for (int bin = 0; bin < f.grid.n; ++bin) {
        const double xi = f.grid.wavenumber(bin);
        const double amp = std::exp(-std::abs(t) * std::pow(std::abs(xi), sym.alpha));
        g.coeffs[bin] *= amp * std::polar(1.0, t * xi * xi * xi);
    }
    return g;
}

double decay_factor(double xi, double t, const LinearSymbol& sym) {
    if (t < 0.0) throw std::invalid_argument("decay_factor: t must be >= 0");
    return std::exp(-t * std::pow(std::abs(xi), sym.alpha));
}

} // namespace dmkdv
