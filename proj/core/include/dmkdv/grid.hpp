#ifndef DMKDV_GRID_HPP
#define DMKDV_GRID_HPP

#include <complex>
#include <vector>

namespace dmkdv {

using cplx = std::complex<double>;

/// Uniform periodic grid on [0, L) with an even number of collocation points.
///
/// Fourier-series convention throughout: u(x) = sum_k c_k exp(i xi_k x) with
/// xi_k = 2*pi*k/L and mode indices k in (-n/2, n/2]. Coefficients are stored
/// in FFT bin order: bin b holds k = b for b <= n/2 and k = b - n otherwise,
/// so the Nyquist mode carries the label +n/2.
struct PeriodicGrid {
    int n = 0;           // collocation points, even, >= 8
    double length = 0.0; // domain length L

    int mode_index(int bin) const { return bin <= n / 2 ? bin : bin - n; }
    int bin_of_mode(int k) const { return k >= 0 ? k : k + n; }
    double wavenumber(int bin) const;
    double node(int j) const;
    std::vector<double> nodes() const;
    int nyquist_bin() const { return n / 2; }

    bool operator==(const PeriodicGrid& o) const {
        return n == o.n && length == o.length;
    }
};

/// Throws std::invalid_argument unless n is even and >= 8 and length > 0.
PeriodicGrid make_grid(int n, double length);

/// Real samples at the collocation points of a grid.
struct RealField {
    PeriodicGrid grid;
    std::vector<double> samples;
};

RealField make_real_field(const PeriodicGrid& g);

/// Fourier-series coefficients, FFT bin order (see PeriodicGrid).
struct SpectralField {
    PeriodicGrid grid;
    std::vector<cplx> coeffs;

    cplx mode(int k) const { return coeffs[grid.bin_of_mode(k)]; }
    void set_mode(int k, cplx v) { coeffs[grid.bin_of_mode(k)] = v; }
};

SpectralField make_spectral_field(const PeriodicGrid& g);

// Field algebra (elementwise on coefficients; grids must match).
SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(double c, const SpectralField& f);
SpectralField operator*(cplx c, const SpectralField& f);
SpectralField& operator+=(SpectralField& a, const SpectralField& b);
SpectralField& operator-=(SpectralField& a, const SpectralField& b);

/// ||u||_{L^2(0,L)} = sqrt(L * sum_k |c_k|^2).
double l2_norm(const SpectralField& f);
/// max_k |c_k|.
double linf_coeff(const SpectralField& f);
/// Largest |c_{-k} - conj(c_k)| over paired bins plus |Im c_0|, |Im c_{n/2}|.
double hermitian_defect(const SpectralField& f);

} // namespace dmkdv

#endif
