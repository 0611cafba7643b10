#include "dmkdv/norms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dmkdv/fft.hpp"
#include "dmkdv/spectral_ops.hpp"

namespace dmkdv {

namespace {

double bump_seed(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

double bracket(double x) { return std::sqrt(1.0 + x * x); }

} // namespace

double CutoffWindow::profile(double t) {
    const double a = std::abs(t);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    const double up = bump_seed(2.0 - a);
    const double down = bump_seed(a - 1.0);
    return up / (up + down);
}

double CutoffWindow::value(double t) const { return profile(t / scale); }

double sobolev_norm(const SpectralField& f, double s) {
    double sum = 0.0;
    for (int bin = 0; bin < f.grid.n; ++bin) {
        const double xi = f.grid.wavenumber(bin);
        sum += std::pow(1.0 + xi * xi, s) * std::norm(f.coeffs[bin]);
    }
    return std::sqrt(f.grid.length * sum);
}

double homogeneous_norm(const SpectralField& f, double s) {
    if (s < 0.0) {
        const double mean = std::abs(f.coeffs[0]);
        if (mean > 1e-13 * std::max(1.0, linf_coeff(f)))
            throw std::invalid_argument("homogeneous_norm: s < 0 requires zero mean");
    }
    double sum = 0.0;
    for (int bin = 1; bin < f.grid.n; ++bin) {
        const double xi = f.grid.wavenumber(bin);
        sum += std::pow(std::abs(xi), 2.0 * s) * std::norm(f.coeffs[bin]);
    }
    return std::sqrt(f.grid.length * sum);
}

SpaceTimeSlab make_windowed_slab(const Trajectory& traj, const CutoffWindow& win,
                                 const LinearSymbol& sym, TimeExtension ext) {
    if (!(traj.dt > 0.0) || traj.states.empty())
        throw std::invalid_argument("make_windowed_slab: empty trajectory");
    if (!(win.scale > 0.0)) throw std::invalid_argument("make_windowed_slab: window scale <= 0");
    if (traj.final_time() + 1e-9 < 2.0 * win.scale)
        throw std::invalid_argument("make_windowed_slab: window longer than trajectory");

    const double dt = traj.dt;
    const int half = static_cast<int>(std::ceil(2.0 * win.scale / dt - 1e-12));
    const int n_time = 2 * half;
    const PeriodicGrid& g = traj.grid;

    SpaceTimeSlab slab{g, dt, n_time, std::vector<cplx>(static_cast<size_t>(n_time) * g.n)};
    const SpectralField& u0 = traj.states[0];
    for (int m = 0; m < n_time; ++m) {
        const double t = dt * (m - half);
        const double w = win.value(t);
        if (w == 0.0) continue;
        SpectralField state =
            t >= 0.0 ? traj.states[m - half]
                     : (ext == TimeExtension::semigroup ? apply_semigroup(u0, t, sym) : u0);
        for (int bin = 0; bin < g.n; ++bin) slab.at(m, bin) = w * state.coeffs[bin];
    }
    return slab;
}

SpaceTimeSlab slab_product(const SpaceTimeSlab& a, const SpaceTimeSlab& b,
                           const SpaceTimeSlab& c) {
    if (!(a.grid == b.grid) || !(a.grid == c.grid) || a.n_time != b.n_time ||
        a.n_time != c.n_time || a.dt != b.dt || a.dt != c.dt)
        throw std::invalid_argument("slab_product: slabs incompatible");
    SpaceTimeSlab out{a.grid, a.dt, a.n_time,
                      std::vector<cplx>(static_cast<size_t>(a.n_time) * a.grid.n)};
    SpectralField fa = make_spectral_field(a.grid), fb = fa, fc = fa;
    for (int m = 0; m < a.n_time; ++m) {
        for (int bin = 0; bin < a.grid.n; ++bin) {
            fa.coeffs[bin] = a.at(m, bin);
            fb.coeffs[bin] = b.at(m, bin);
            fc.coeffs[bin] = c.at(m, bin);
        }
        const SpectralField p = dealiased_triple_product(fa, fb, fc);
        for (int bin = 0; bin < a.grid.n; ++bin) out.at(m, bin) = p.coeffs[bin];
    }
    return out;
}

SpaceTimeSlab slab_derivative(const SpaceTimeSlab& s) {
    SpaceTimeSlab out = s;
    for (int m = 0; m < s.n_time; ++m) {
        for (int bin = 0; bin < s.grid.n; ++bin)
            out.at(m, bin) *= cplx{0.0, s.grid.wavenumber(bin)};
        out.at(m, s.grid.nyquist_bin()) = 0.0;
    }
    return out;
}

namespace {

// sqrt( L * P * sum |w(xi, tau) chat|^2 ) for an arbitrary weight.
template <typename WeightFn>
double slab_weighted_norm(const SpaceTimeSlab& slab, WeightFn&& weight) {
    const int n_time = slab.n_time;
    const int half = n_time / 2;
    const int nx = slab.grid.n;
    const double period = slab.period();
    const double dtau = 2.0 * std::numbers::pi / period;

    std::vector<cplx> series(n_time), spec;
    double total = 0.0;
    for (int bin = 0; bin < nx; ++bin) {
        const double xi = slab.grid.wavenumber(bin);
        // Wrap so index p = 0 is t = 0; the DFT phase then matches exp(-i tau t).
        for (int p = 0; p < n_time; ++p) series[p] = slab.at((p + half) % n_time, bin);
        fft::forward(series, spec);
        for (int q = 0; q < n_time; ++q) {
            const int nu = q <= n_time / 2 ? q : q - n_time;
            const double tau = dtau * nu;
            const double w = weight(xi, tau);
            total += w * w * std::norm(spec[q] / static_cast<double>(n_time));
        }
    }
    return std::sqrt(slab.grid.length * period * total);
}

} // namespace

double slab_bourgain_norm(const SpaceTimeSlab& slab, const NormParams& p, ModulationWeight mw) {
    const double alpha = p.sym.alpha;
    return slab_weighted_norm(slab, [&](double xi, double tau) {
        const double a = tau - xi * xi * xi;
        const double c = std::pow(std::abs(xi), alpha);
        const double base = mw == ModulationWeight::complex_bracket
                                ? std::sqrt(1.0 + a * a + c * c)
                                : bracket(std::abs(a) + c);
        return std::pow(base, p.b) * std::pow(1.0 + xi * xi, p.s / 2.0);
    });
}

double slab_spacetime_sobolev_norm(const SpaceTimeSlab& slab, double s, double b) {
    return slab_weighted_norm(slab, [&](double xi, double tau) {
        return std::pow(1.0 + xi * xi, s / 2.0) * std::pow(1.0 + tau * tau, b / 2.0);
    });
}

double bourgain_norm(const Trajectory& traj, const NormParams& p, const CutoffWindow& win,
                     TimeExtension ext, ModulationWeight mw) {
    return slab_bourgain_norm(make_windowed_slab(traj, win, p.sym, ext), p, mw);
}

double spacetime_sobolev_norm(const Trajectory& traj, double s, double b,
                              const CutoffWindow& win, TimeExtension ext) {
    return slab_spacetime_sobolev_norm(make_windowed_slab(traj, win, LinearSymbol{2.0}, ext), s,
                                       b);
}

double window_time_norm(const CutoffWindow& win, double dt, double b) {
    const int half = static_cast<int>(std::ceil(2.0 * win.scale / dt - 1e-12));
    const int n_time = 2 * half;
    const double period = dt * n_time;
    const double dtau = 2.0 * std::numbers::pi / period;
    std::vector<cplx> series(n_time), spec;
    for (int p = 0; p < n_time; ++p) {
        const int m = (p + half) % n_time;
        series[p] = win.value(dt * (m - half));
    }
    fft::forward(series, spec);
    double total = 0.0;
    for (int q = 0; q < n_time; ++q) {
        const int nu = q <= n_time / 2 ? q : q - n_time;
        const double tau = dtau * nu;
        total += std::pow(1.0 + tau * tau, b) * std::norm(spec[q] / static_cast<double>(n_time));
    }
    return std::sqrt(period * total);
}

} // namespace dmkdv
