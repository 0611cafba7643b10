#ifndef DMKDV_MULTIPLIER_HPP
#define DMKDV_MULTIPLIER_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "dmkdv/grid.hpp"
#include "dmkdv/linear_flow.hpp"
#include "dmkdv/norms.hpp"

namespace dmkdv {

/// Symmetric truncation box discretizing Z = R x R: points (i*xi_step, j*tau_step)
/// with |xi| <= xi_extent, |tau| <= tau_extent. Extents must be integer
/// multiples of the steps.
struct FrequencyLattice {
    double xi_step = 1.0;
    double tau_step = 1.0;
    double xi_extent = 4.0;
    double tau_extent = 4.0;

    int xi_count() const;  // points per axis, 2*(extent/step) + 1
    int tau_count() const;
    double xi(int i) const;  // i in [0, xi_count)
    double tau(int j) const;
    double cell() const { return xi_step * tau_step; } // measure of one Z cell
};

FrequencyLattice make_lattice(double xi_step, double tau_step, double xi_extent,
                              double tau_extent); // validates

/// A [3; R x R]-multiplier evaluated on the hyperplane
/// xi1+xi2+xi3 = 0, tau1+tau2+tau3 = 0.
using MultiplierFn =
    std::function<cplx(double xi1, double xi2, double xi3, double tau1, double tau2, double tau3)>;

/// Resonance function on the hyperplane: h = xi1^3 + xi2^3 + xi3^3 with
/// xi3 = -(xi1 + xi2). Algebraically equal to 3*xi1*xi2*xi3.
double resonance(double xi1, double xi2);

/// Dyadic shells: |x| ~ M means M <= |x| < 2M, except that the modulation
/// shell L = 1 pools everything below 2 (the lambda >~ 1 restriction).
bool in_dyadic_shell(double value, double shell);
bool in_modulation_shell(double lambda, double shell);

/// Block parameters (N1,N2,N3; H; L1,L2,L3), all dyadic, L_j >= 1.
struct DyadicBlockParams {
    double n1 = 1, n2 = 1, n3 = 1;
    double h = 1;
    double l1 = 1, l2 = 1, l3 = 1;
};

bool is_dyadic(double v);

/// Support constraints: N_med >= N_max/2, L_max within one dyadic step of
/// max(H, L_med), H within a factor 4 of N1*N2*N3, everything dyadic.
bool block_feasible(const DyadicBlockParams& p);

/// 0/1 multiplier chi_{|h|~H} prod_j chi_{|xi_j|~N_j} chi_{|lambda_j|~L_j},
/// lambda_j = tau_j - xi_j^3.
MultiplierFn block_indicator(const DyadicBlockParams& p);

enum class TaoCase { pp_coherence, pm_coherence, generic };

/// Case of the dyadic block bound. (++): N_max ~ N_min and L_max ~ H.
/// (+-): two comparable large frequencies dominate the third by >= 4 and the
/// modulation at the small-frequency slot carries L_max ~ H, dominating the
/// other two by >= 4. Everything else: generic.
TaoCase classify_block(const DyadicBlockParams& p);

/// Value of the dyadic block estimate:
///  (++)     L_min^{1/2} N_max^{-1/4} L_med^{1/4}
///  (+-)     L_min^{1/2} N_max^{-1} min(H, (N_max/N_min) L_med)^{1/2}
///  generic  L_min^{1/2} N_max^{-1} min(H, L_med)^{1/2}
/// Throws std::invalid_argument for infeasible parameters.
double tao_block_bound(const DyadicBlockParams& p);

struct MaximizerOptions {
    int iters = 12;
    int restarts = 3;
    std::uint64_t seed = 0x5eedULL;
};

/// Lower bound on the discretized [3;Z]-multiplier norm by alternating
/// maximization of |trilinear form| / prod ||f_j|| over lattice functions.
/// Monotone nondecreasing in iters; every returned value is a valid lower
/// bound. Returns 0 for a multiplier that vanishes on the lattice.
double norm_lower_bound(const MultiplierFn& m, const FrequencyLattice& lat, int iters);
double norm_lower_bound(const MultiplierFn& m, const FrequencyLattice& lat,
                        const MaximizerOptions& opt);

/// Schur-type upper bound: min over the three slots of
/// sup_{z_a} ( int |m|^2 dz_b )^{1/2} with the third variable eliminated.
double norm_upper_bound(const MultiplierFn& m, const FrequencyLattice& lat);

/// Multiplier of product form m1(z1) m2(z2) m3(z3); any factor may be null
/// (treated as 1). The maximizer runs on FFT convolutions, so large boxes are
/// affordable.
struct SeparableMultiplier {
    std::function<double(double xi, double tau)> m1, m2, m3;
};

double norm_lower_bound(const SeparableMultiplier& m, const FrequencyLattice& lat,
                        const MaximizerOptions& opt);

struct BlockVerification {
    DyadicBlockParams params;
    double lower_bound = 0;
    double upper_bound = 0;
    double tao_bound = 0;
    double ratio = 0; // lower_bound / tao_bound
};

/// Measure the block norm on the lattice (banded engine over the exact
/// hyperplane) and compare with tao_block_bound. The lattice extents must
/// cover the shells; a tau_step too coarse to give the L_min shell at least
/// one lattice line throws.
BlockVerification verify_block(const DyadicBlockParams& p, const FrequencyLattice& lat,
                               const MaximizerOptions& opt = {});

/// Deterministic list of feasible blocks with nonempty support, N_max <= n_max.
std::vector<DyadicBlockParams> feasible_block_sweep(double n_max, int max_blocks);

struct WeightedNormCheck {
    double s = 0;
    double eps = 0;
    double alpha = 0;
    std::vector<double> extents;
    std::vector<double> bounds;
    double log_slope = 0; // least-squares slope of log(bound) vs log(extent)
};

/// Growth probe for the reduced bilinear multiplier
///   <xi1>^{-s} <xi2>^{1/2} / ( <i l1 + |xi1|^a>^{1/2} <i l2 + |xi2|^a>^{1/2-eps} ),
/// evaluated on lattices scaled from `base` by factors {1, 2, 4} in xi extent
/// (tau extent grows with the cube of the scale so the characteristic curve
/// stays inside the box).
WeightedNormCheck weighted_norm_check(double s, double eps, const LinearSymbol& sym,
                                      const FrequencyLattice& base,
                                      const MaximizerOptions& opt = {});

/// Sampled trilinear estimate ratio
///   || d/dx(u1 u2 u3) ||_{X^{s,-1/2+eps}} / prod_j || u_j ||_{X^{s,1/2}}
/// on windowed extensions of the trajectories (each factor windowed once; the
/// product inherits the compact support). Throws if a denominator vanishes.
double trilinear_ratio(const Trajectory& u1, const Trajectory& u2, const Trajectory& u3,
                       const NormParams& p, double eps, const CutoffWindow& win);

} // namespace dmkdv

#endif
