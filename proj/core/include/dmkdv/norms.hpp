#ifndef DMKDV_NORMS_HPP
#define DMKDV_NORMS_HPP

#include "dmkdv/duhamel.hpp"
#include "dmkdv/grid.hpp"
#include "dmkdv/linear_flow.hpp"

namespace dmkdv {

struct NormParams {
    double s = 0.0; // spatial regularity
    double b = 0.0; // modulation regularity
    LinearSymbol sym;
};

/// Smooth even cutoff: 1 on [-1,1], supported in [-2,2], built from
/// exp(-1/x) transitions. psi_T(t) = psi(t / scale).
struct CutoffWindow {
    double scale = 1.0;

    double value(double t) const;          // psi(t / scale)
    static double profile(double t);       // psi itself
};

/// ||f||_{H^s} = sqrt( L sum_k <xi_k>^{2s} |c_k|^2 ),  <x> = (1+x^2)^{1/2}.
double sobolev_norm(const SpectralField& f, double s);

/// ||f||_{Hdot^s} = sqrt( L sum_{k!=0} |xi_k|^{2s} |c_k|^2 ).
/// For s < 0 the zero mode must vanish (throws otherwise).
double homogeneous_norm(const SpectralField& f, double s);

/// How a trajectory on [0,T] is continued to negative times before windowing.
enum class TimeExtension {
    semigroup,     // u(-t) := W(-t) u(0), the extended semigroup
    hold_constant, // u(-t) := u(0)  (diagnostic: makes separable data separable)
};

/// Windowed space-time sample: psi_T(t_m) u(t_m) on the uniform time grid
/// t_m = (m - K) dt, m = 0..2K-1, K = ceil(2*scale/dt). Time-periodic with
/// period 2K dt (the window vanishes at the edges). Data is stored time-major:
/// data[m * grid.n + bin].
struct SpaceTimeSlab {
    PeriodicGrid grid;
    double dt = 0.0;
    int n_time = 0;
    std::vector<cplx> data;

    double period() const { return dt * n_time; }
    double time(int m) const { return dt * (m - n_time / 2); }
    cplx& at(int m, int bin) { return data[static_cast<size_t>(m) * grid.n + bin]; }
    cplx at(int m, int bin) const { return data[static_cast<size_t>(m) * grid.n + bin]; }
};

/// Build the windowed slab from a trajectory. Requires traj.final_time() >=
/// 2 * win.scale (window must fit) and dt > 0.
SpaceTimeSlab make_windowed_slab(const Trajectory& traj, const CutoffWindow& win,
                                 const LinearSymbol& sym,
                                 TimeExtension ext = TimeExtension::semigroup);

/// Pointwise product of slabs on matching grids, dealiased in x per node.
SpaceTimeSlab slab_product(const SpaceTimeSlab& a, const SpaceTimeSlab& b,
                           const SpaceTimeSlab& c);
/// d/dx per node (Nyquist-zeroed).
SpaceTimeSlab slab_derivative(const SpaceTimeSlab& s);

/// Which form of the modulation bracket to use.
enum class ModulationWeight {
    complex_bracket, // <i(tau - xi^3) + |xi|^alpha> = (1 + a^2 + c^2)^{1/2}
    abs_sum,         // <|tau - xi^3| + |xi|^alpha>  = (1 + (|a|+c)^2)^{1/2}
};

/// Bourgain norm of an already-windowed slab:
/// sqrt( L * P * sum_{k,n} w(xi_k, tau_n)^2 |chat_{k,n}|^2 ) with
/// w = <xi>^s * bracket^b, tau_n = 2*pi*n/P, P the slab period.
double slab_bourgain_norm(const SpaceTimeSlab& slab, const NormParams& p,
                          ModulationWeight mw = ModulationWeight::complex_bracket);

/// Space-time Sobolev norm of a slab: weight <xi>^s <tau>^b.
double slab_spacetime_sobolev_norm(const SpaceTimeSlab& slab, double s, double b);

/// X^{s,b}_alpha norm of the windowed trajectory (window + extension + 2D
/// transform + weight). Throws if the window does not fit the trajectory.
double bourgain_norm(const Trajectory& traj, const NormParams& p, const CutoffWindow& win,
                     TimeExtension ext = TimeExtension::semigroup,
                     ModulationWeight mw = ModulationWeight::complex_bracket);

/// H^{s,b}_{x,t} norm of the windowed trajectory. The symbol only enters
/// through the negative-time extension.
double spacetime_sobolev_norm(const Trajectory& traj, double s, double b,
                              const CutoffWindow& win,
                              TimeExtension ext = TimeExtension::semigroup,
                              const LinearSymbol& sym = LinearSymbol{2.0});

/// H^b-in-time norm of the window sampled like a slab with time step dt:
/// sqrt( P * sum_n <tau_n>^{2b} |psihat_n|^2 ). Oracle helper for the
/// factorization of time-independent trajectories.
double window_time_norm(const CutoffWindow& win, double dt, double b);

} // namespace dmkdv

#endif
