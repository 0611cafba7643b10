#ifndef DMKDV_RANDOM_FIELDS_HPP
#define DMKDV_RANDOM_FIELDS_HPP

#include <cstdint>

#include "dmkdv/grid.hpp"

namespace dmkdv {

/// Deterministic uniform double in [0, 1) from a 64-bit state step (splitmix64).
/// All field generators below are bit-reproducible for a given seed.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next_u64();
    double next_double(); // [0, 1)
    double next_symmetric(); // [-1, 1)
};

/// Random real field with i.i.d. phases and amplitude envelope
/// exp(-|xi| / decay_scale); zero mean, zero Nyquist, rescaled so
/// max_j |u(x_j)| = amplitude. amplitude = 0 gives the zero field.
SpectralField smooth_random_field(const PeriodicGrid& g, std::uint64_t seed,
                                  double amplitude, double decay_scale = 8.0);

/// Rough data of regularity s: envelope <xi>^{-s - 1/2 - 0.01}, random phases,
/// zero mean, zero Nyquist, rescaled to max amplitude.
SpectralField rough_random_field(const PeriodicGrid& g, std::uint64_t seed, double s,
                                 double amplitude);

/// Real even mode packet centered at |xi| = center with Gaussian envelope of
/// relative width rel_width (std = rel_width * center), unit L2 norm.
/// Modes below center/2 are cleared so the packet is genuinely high-frequency.
SpectralField mode_packet(const PeriodicGrid& g, double center, double rel_width = 0.125);

/// Mode packet with random phases (Hermitian), unit L2 norm.
SpectralField random_mode_packet(const PeriodicGrid& g, std::uint64_t seed, double center,
                                 double rel_width = 0.125);

} // namespace dmkdv

#endif
