#ifndef DMKDV_SPECTRAL_OPS_HPP
#define DMKDV_SPECTRAL_OPS_HPP

#include <functional>

#include "dmkdv/grid.hpp"

namespace dmkdv {

/// Series coefficients of a real field: c_k = (1/n) sum_j u(x_j) exp(-i xi_k x_j).
/// Round trip with inverse_transform is identity to ~1e-15.
SpectralField forward_transform(const RealField& f);

/// Real samples from coefficients. Requires Hermitian symmetry; a defect above
/// 1e-9 * max(1, |c|_inf) throws std::invalid_argument. Sub-tolerance imaginary
/// residue is discarded.
RealField inverse_transform(const SpectralField& f);

/// c_k -> symbol(xi_k) * c_k. Throws if the symbol is non-finite at any grid
/// wavenumber.
SpectralField apply_multiplier(const SpectralField& f,
                               const std::function<cplx(double)>& symbol);

/// d/dx in Fourier space (symbol i*xi) with the Nyquist mode zeroed: the odd
/// symbol has no conjugate partner at bin n/2.
SpectralField spectral_derivative(const SpectralField& f);

/// Coefficients of f*g*h with cubic-product aliasing removed on the retained
/// modes: all three inputs are zero-padded onto a 2x grid, multiplied
/// pointwise, and the product is truncated back.
SpectralField dealiased_triple_product(const SpectralField& f,
                                       const SpectralField& g,
                                       const SpectralField& h);

/// dealiased_triple_product(f, f, f).
SpectralField dealiased_cube(const SpectralField& f);

/// Zero-pad the coefficients onto a grid with `factor * n` points (same length).
SpectralField pad_modes(const SpectralField& f, int factor);
/// Keep only the modes representable on an n-point grid (same length).
SpectralField truncate_modes(const SpectralField& f, int n);

} // namespace dmkdv

#endif
