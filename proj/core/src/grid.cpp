#include "dmkdv/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dmkdv {

double PeriodicGrid::wavenumber(int bin) const {
    return 2.0 * std::numbers::pi * mode_index(bin) / length;
}

double PeriodicGrid::node(int j) const { return length * j / n; }

std::vector<double> PeriodicGrid::nodes() const {
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) x[j] = node(j);
    return x;
}

PeriodicGrid make_grid(int n, double length) {
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("grid: n must be even and >= 8");
    if (!(length > 0.0)) throw std::invalid_argument("grid: length must be positive");
    return PeriodicGrid{n, length};
}

RealField make_real_field(const PeriodicGrid& g) { return RealField{g, std::vector<double>(g.n, 0.0)}; }

SpectralField make_spectral_field(const PeriodicGrid& g) {
    return SpectralField{g, std::vector<cplx>(g.n, cplx{0.0, 0.0})};
}

namespace {
void check_same_grid(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("field algebra: grid mismatch");
}
} // namespace

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
    check_same_grid(a, b);
    SpectralField r = a;
    for (int i = 0; i < r.grid.n; ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
    check_same_grid(a, b);
    SpectralField r = a;
    for (int i = 0; i < r.grid.n; ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

SpectralField operator*(double c, const SpectralField& f) {
    SpectralField r = f;
    for (auto& v : r.coeffs) v *= c;
    return r;
}

SpectralField operator*(cplx c, const SpectralField& f) {
    SpectralField r = f;
    for (auto& v : r.coeffs) v *= c;
    return r;
}

SpectralField& operator+=(SpectralField& a, const SpectralField& b) {
    check_same_grid(a, b);
    for (int i = 0; i < a.grid.n; ++i) a.coeffs[i] += b.coeffs[i];
    return a;
}

SpectralField& operator-=(SpectralField& a, const SpectralField& b) {
    check_same_grid(a, b);
    for (int i = 0; i < a.grid.n; ++i) a.coeffs[i] -= b.coeffs[i];
    return a;
}

double l2_norm(const SpectralField& f) {
    double s = 0.0;
    for (const auto& c : f.coeffs) s += std::norm(c);
    return std::sqrt(f.grid.length * s);
}

double linf_coeff(const SpectralField& f) {
    double m = 0.0;
    for (const auto& c : f.coeffs) m = std::max(m, std::abs(c));
    return m;
}

double hermitian_defect(const SpectralField& f) {
    const int n = f.grid.n;
    double d = std::abs(f.coeffs[0].imag());
    d = std::max(d, std::abs(f.coeffs[n / 2].imag()));
    for (int k = 1; k < n / 2; ++k) {
        d = std::max(d, std::abs(f.coeffs[k] - std::conj(f.coeffs[n - k])));
    }
    return d;
}

} // namespace dmkdv
