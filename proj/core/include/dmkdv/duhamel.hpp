#ifndef DMKDV_DUHAMEL_HPP
#define DMKDV_DUHAMEL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "dmkdv/grid.hpp"
#include "dmkdv/linear_flow.hpp"

namespace dmkdv {

enum class TimeStepper { picard, etd };

struct SolverConfig {
    LinearSymbol sym;
    double T = 0.1;                // final time
    double dt = 1e-3;              // step, dt <= T
    TimeStepper method = TimeStepper::etd;
    int picard_max_iters = 60;
    double picard_tol = 1e-10;     // sup-in-time L2 of successive difference
    bool linear_only = false;      // test hook: drop the nonlinearity
};

void validate(const SolverConfig& cfg);

/// States on the uniform time grid t_m = m*dt, m = 0..M, t_M = T.
struct Trajectory {
    PeriodicGrid grid;
    double dt = 0.0;
    std::vector<SpectralField> states;

    int steps() const { return static_cast<int>(states.size()) - 1; }
    double time(int m) const { return dt * m; }
    double final_time() const { return dt * steps(); }
    const SpectralField& state(int m) const { return states[m]; }
};

/// Integrand factor of the Duhamel term: (1/3) d/dx (u^3), dealiased,
/// Nyquist-zeroed derivative. The minus sign of the integral equation stays
/// with the caller.
SpectralField nonlinear_term(const SpectralField& u);

struct PicardLog {
    std::vector<double> residuals; // sup-in-time L2 difference per iteration
    bool converged = false;
    int iterations = 0;
};

struct PicardResult {
    Trajectory trajectory;
    PicardLog log;
};

/// Thrown when the fixed-point iteration fails to reach picard_tol; carries
/// the residual history (the empirical sign that T is too large for
/// contraction at this data size).
class PicardDivergence : public std::runtime_error {
  public:
    PicardDivergence(std::string msg, PicardLog log)
        : std::runtime_error(std::move(msg)), log_(std::move(log)) {}
    const PicardLog& log() const { return log_; }

  private:
    PicardLog log_;
};

/// Thrown by etd_solve when the L2 norm exceeds 1e6 x initial.
class BlowupError : public std::runtime_error {
  public:
    BlowupError(std::string msg, int step) : std::runtime_error(std::move(msg)), step_(step) {}
    int step() const { return step_; }

  private:
    int step_;
};

/// Picard iteration on the integral equation
///   u(t) = W(t) phi - (1/3) int_0^t W(t-t') d/dx(u^3(t')) dt'
/// starting from u^0(t) = W(t) phi, with the time integral evaluated by
/// trapezoidal quadrature on the trajectory grid. Stops when the sup-in-time
/// L2 difference of successive iterates drops below cfg.picard_tol.
PicardResult picard_solve(const SpectralField& phi, const SolverConfig& cfg);

/// Two-stage exponential integrator (ETD2RK): exact on the linear flow,
/// second order on the nonlinear part.
Trajectory etd_solve(const SpectralField& phi, const SolverConfig& cfg);

/// Centered finite-difference directional derivative of the data-to-solution
/// map: (u(phi + eps v) - u(phi - eps v)) / (2 eps), per time node.
Trajectory solution_map_derivative(const SpectralField& phi, const SpectralField& direction,
                                   double eps, const SolverConfig& cfg);

/// Sup over time nodes of the L2 distance between two trajectories on the
/// same grid (states compared node by node; node counts must match).
double sup_l2_distance(const Trajectory& a, const Trajectory& b);

/// Residual of the trajectory in the discretized integral equation:
/// sup_m || u(t_m) - [W(t_m)phi - trapz_{0..m} W(t_m - t_j) N(u(t_j))] ||_{L2}.
double duhamel_residual(const Trajectory& traj, const SolverConfig& cfg);

} // namespace dmkdv

#endif
