#include "dmkdv/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace dmkdv::fft {

namespace {

// Plans are created once per (size, sign) with FFTW_UNALIGNED so they can be
// replayed on any caller buffer via the new-array interface (thread safe).
struct PlanCache {
    std::mutex mtx;
    std::map<std::pair<int, int>, fftw_plan> plans;

    fftw_plan get(int n, int sign) {
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(n, sign);
        auto it = plans.find(key);
        if (it != plans.end()) return it->second;
        std::vector<std::complex<double>> a(n), b(n);
        fftw_plan p = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                                       reinterpret_cast<fftw_complex*>(b.data()), sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fftw plan creation failed");
        plans.emplace(key, p);
        return p;
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void run(const std::vector<std::complex<double>>& in, std::vector<std::complex<double>>& out,
         int sign) {
    const int n = static_cast<int>(in.size());
    if (n == 0) throw std::invalid_argument("fft: empty input");
    out.resize(in.size());
    fftw_plan p = cache().get(n, sign);
    // fftw_execute_dft does not modify the input array for out-of-place c2c.
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
}

} // namespace

void forward(const std::vector<std::complex<double>>& in, std::vector<std::complex<double>>& out) {
    run(in, out, FFTW_FORWARD);
}

void backward(const std::vector<std::complex<double>>& in, std::vector<std::complex<double>>& out) {
    run(in, out, FFTW_BACKWARD);
}

} // namespace dmkdv::fft
