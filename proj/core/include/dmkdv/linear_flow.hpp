#ifndef DMKDV_LINEAR_FLOW_HPP
#define DMKDV_LINEAR_FLOW_HPP

#include "dmkdv/grid.hpp"

namespace dmkdv {

/// Dissipation order alpha in (0, 3]. The linear part of the equation is the
/// multiplier i*xi^3 (dispersion) plus -|xi|^alpha (dissipation).
struct LinearSymbol {
    double alpha = 2.0;
};

LinearSymbol make_symbol(double alpha); // validates (0, 3]

/// Airy group U(t): c_k -> exp(i t xi_k^3) c_k. Unitary on L^2 for every t.
SpectralField apply_airy(const SpectralField& f, double t);

/// Dissipative semigroup extended to all real t:
/// c_k -> exp(-|t| |xi_k|^alpha + i t xi_k^3) c_k.
SpectralField apply_semigroup(const SpectralField& f, double t, const LinearSymbol& sym);

/// Modulus of the semigroup symbol for t >= 0: exp(-t |xi|^alpha).
double decay_factor(double xi, double t, const LinearSymbol& sym);

} // namespace dmkdv

#endif
