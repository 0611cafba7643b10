#include "dmkdv/duhamel.hpp"

#include <cmath>
#include <stdexcept>

#include "dmkdv/spectral_ops.hpp"

namespace dmkdv {

namespace {

int node_count(const SolverConfig& cfg) {
    const double ratio = cfg.T / cfg.dt;
    const int m = static_cast<int>(std::lround(ratio));
    if (m < 1 || std::abs(ratio - m) > 1e-9 * std::max(1.0, ratio))
        throw std::invalid_argument("solver: dt must divide T");
    return m;
}

// exp((i xi^3 - |xi|^alpha) * t) per bin.
std::vector<cplx> semigroup_symbol(const PeriodicGrid& g, double t, const LinearSymbol& sym) {
    std::vector<cplx> s(g.n);
    for (int bin = 0; bin < g.n; ++bin) {
        const double xi = g.wavenumber(bin);
        s[bin] = std::exp(-std::abs(t) * std::pow(std::abs(xi), sym.alpha)) *
                 std::polar(1.0, t * xi * xi * xi);
    }
    return s;
}

void mul_into(SpectralField& f, const std::vector<cplx>& symbol) {
    for (int i = 0; i < f.grid.n; ++i) f.coeffs[i] *= symbol[i];
}

SpectralField mul(const SpectralField& f, const std::vector<cplx>& symbol) {
    SpectralField g = f;
    mul_into(g, symbol);
    return g;
}

// phi1(z) = (e^z - 1)/z, phi2(z) = (e^z - z - 1)/z^2; series below |z| = 1/4.
cplx phi1(cplx z) {
    if (std::abs(z) < 0.25) {
        cplx term{1.0, 0.0}, sum{1.0, 0.0};
        for (int m = 1; m <= 14; ++m) {
            term *= z / static_cast<double>(m + 1);
            sum += term;
        }
        return sum;
    }
    return (std::exp(z) - 1.0) / z;
}

cplx phi2(cplx z) {
    if (std::abs(z) < 0.25) {
        cplx term{0.5, 0.0}, sum{0.5, 0.0};
        for (int m = 1; m <= 14; ++m) {
            term *= z / static_cast<double>(m + 2);
            sum += term;
        }
        return sum;
    }
    return (std::exp(z) - z - 1.0) / (z * z);
}

} // namespace

void validate(const SolverConfig& cfg) {
    if (!(cfg.sym.alpha > 0.0) || cfg.sym.alpha > 3.0)
        throw std::invalid_argument("solver: alpha must lie in (0, 3]");
    if (!(cfg.T > 0.0) || !(cfg.dt > 0.0) || cfg.dt > cfg.T + 1e-15)
        throw std::invalid_argument("solver: need 0 < dt <= T");
    if (!(cfg.picard_tol > 0.0)) throw std::invalid_argument("solver: picard_tol must be > 0");
    if (cfg.picard_max_iters < 1)
        throw std::invalid_argument("solver: picard_max_iters must be >= 1");
    node_count(cfg);
}

SpectralField nonlinear_term(const SpectralField& u) {
    return (1.0 / 3.0) * spectral_derivative(dealiased_cube(u));
}

PicardResult picard_solve(const SpectralField& phi, const SolverConfig& cfg) {
    validate(cfg);
    const int m_end = node_count(cfg);
    const PeriodicGrid& g = phi.grid;
    const double dt = cfg.dt;

    std::vector<std::vector<cplx>> lag(m_end + 1);
    for (int d = 0; d <= m_end; ++d) lag[d] = semigroup_symbol(g, d * dt, cfg.sym);

    // Free evolution, the starting iterate.
    std::vector<SpectralField> free(m_end + 1);
    for (int m = 0; m <= m_end; ++m) free[m] = mul(phi, lag[m]);

    std::vector<SpectralField> u = free;
    PicardLog log;

    for (int iter = 1; iter <= cfg.picard_max_iters; ++iter) {
        std::vector<SpectralField> q(m_end + 1);
        for (int m = 0; m <= m_end; ++m)
            q[m] = cfg.linear_only ? make_spectral_field(g) : nonlinear_term(u[m]);

        // Trapezoid sum via the recursion J_m = W(dt)(J_{m-1} + w dt q_{m-1}),
        // w = 1/2 at the left endpoint, 1 inside; I_m = J_m + dt/2 q_m.
        std::vector<SpectralField> next(m_end + 1);
        next[0] = phi;
        SpectralField running = make_spectral_field(g);
        double residual = 0.0;
        for (int m = 1; m <= m_end; ++m) {
            const double w = (m - 1 == 0) ? 0.5 : 1.0;
            running += (w * dt) * q[m - 1];
            mul_into(running, lag[1]);
            next[m] = free[m] - (running + (0.5 * dt) * q[m]);
            residual = std::max(residual, l2_norm(next[m] - u[m]));
        }
        log.residuals.push_back(residual);
        log.iterations = iter;
        u = std::move(next);
        if (residual < cfg.picard_tol) {
            log.converged = true;
            return PicardResult{Trajectory{g, dt, std::move(u)}, std::move(log)};
        }
    }
    throw PicardDivergence("picard_solve: no contraction within max iterations (T too large?)",
                           std::move(log));
}

Trajectory etd_solve(const SpectralField& phi, const SolverConfig& cfg) {
    validate(cfg);
    const int m_end = node_count(cfg);
    const PeriodicGrid& g = phi.grid;
    const double dt = cfg.dt;

    std::vector<cplx> E(g.n), P1(g.n), P2(g.n);
    for (int bin = 0; bin < g.n; ++bin) {
        const double xi = g.wavenumber(bin);
        const cplx z = dt * cplx{-std::pow(std::abs(xi), cfg.sym.alpha), xi * xi * xi};
        E[bin] = std::exp(z);
        P1[bin] = dt * phi1(z);
        P2[bin] = dt * phi2(z);
    }

    const double initial_norm = l2_norm(phi);
    Trajectory traj{g, dt, {}};
    traj.states.reserve(m_end + 1);
    traj.states.push_back(phi);

    SpectralField u = phi;
    for (int m = 1; m <= m_end; ++m) {
        if (cfg.linear_only) {
            mul_into(u, E);
        } else {
            // N(u) = -(1/3) d/dx(u^3); ETD2RK predictor/corrector.
            const SpectralField nu = -1.0 * nonlinear_term(u);
            SpectralField a = mul(u, E);
            a += mul(nu, P1);
            const SpectralField na = -1.0 * nonlinear_term(a);
            u = a + mul(na - nu, P2);
        }
        if (initial_norm > 0.0 && l2_norm(u) > 1e6 * initial_norm)
            throw BlowupError("etd_solve: L2 blow-up at step " + std::to_string(m), m);
        traj.states.push_back(u);
    }
    return traj;
}

Trajectory solution_map_derivative(const SpectralField& phi, const SpectralField& direction,
                                   double eps, const SolverConfig& cfg) {
    if (!(eps > 0.0)) throw std::invalid_argument("solution_map_derivative: eps must be > 0");
    auto solve = [&](const SpectralField& data) {
        return cfg.method == TimeStepper::picard ? picard_solve(data, cfg).trajectory
                                                 : etd_solve(data, cfg);
    };
    const Trajectory plus = solve(phi + eps * direction);
    const Trajectory minus = solve(phi - eps * direction);
    Trajectory d{plus.grid, plus.dt, {}};
    d.states.reserve(plus.states.size());
    for (size_t m = 0; m < plus.states.size(); ++m)
        d.states.push_back((1.0 / (2.0 * eps)) * (plus.states[m] - minus.states[m]));
    return d;
}

double sup_l2_distance(const Trajectory& a, const Trajectory& b) {
    if (a.states.size() != b.states.size() || !(a.grid == b.grid))
        throw std::invalid_argument("sup_l2_distance: trajectories incompatible");
    double d = 0.0;
    for (size_t m = 0; m < a.states.size(); ++m)
        d = std::max(d, l2_norm(a.states[m] - b.states[m]));
    return d;
}

double duhamel_residual(const Trajectory& traj, const SolverConfig& cfg) {
    const int m_end = traj.steps();
    const PeriodicGrid& g = traj.grid;
    const double dt = traj.dt;
    const SpectralField& phi = traj.states[0];

    std::vector<std::vector<cplx>> lag(m_end + 1);
    for (int d = 0; d <= m_end; ++d) lag[d] = semigroup_symbol(g, d * dt, cfg.sym);
    std::vector<SpectralField> q(m_end + 1);
    for (int m = 0; m <= m_end; ++m)
        q[m] = cfg.linear_only ? make_spectral_field(g) : nonlinear_term(traj.states[m]);

    double res = 0.0;
    for (int m = 1; m <= m_end; ++m) {
        SpectralField integral = make_spectral_field(g);
        for (int j = 0; j <= m; ++j) {
            const double w = (j == 0 || j == m) ? 0.5 : 1.0;
            integral += (w * dt) * mul(q[j], lag[m - j]);
        }
        const SpectralField rhs = mul(phi, lag[m]) - integral;
        res = std::max(res, l2_norm(traj.states[m] - rhs));
    }
    return res;
}

} // namespace dmkdv
