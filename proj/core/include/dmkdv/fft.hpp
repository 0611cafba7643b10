#ifndef DMKDV_FFT_HPP
#define DMKDV_FFT_HPP

#include <complex>
#include <vector>

namespace dmkdv::fft {

/// Unnormalized DFT, out[k] = sum_j in[j] exp(-2*pi*i*j*k/n). Any n >= 1.
/// Thread safe; plans are cached per size behind a mutex.
void forward(const std::vector<std::complex<double>>& in,
             std::vector<std::complex<double>>& out);

/// Unnormalized inverse DFT, out[j] = sum_k in[k] exp(+2*pi*i*j*k/n).
void backward(const std::vector<std::complex<double>>& in,
              std::vector<std::complex<double>>& out);

} // namespace dmkdv::fft

#endif
