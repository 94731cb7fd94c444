#include "painterly/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

#include "painterly/error.hpp"

namespace painterly {

namespace {

static_assert(sizeof(Complex) == sizeof(fftw_complex));

// FFTW planning is not thread-safe; execution of an existing plan on new
// arrays is. Plans are built once per (size, direction) and kept for the
// process lifetime. FFTW_UNALIGNED lets them run on std::vector storage.
class PlanCache {
public:
    fftw_plan get(int n, int sign) {
        std::lock_guard lock(mutex_);
        auto& plan = plans_[{n, sign}];
        if (!plan) {
            auto* scratch = fftw_alloc_complex(static_cast<std::size_t>(n) * n);
            plan = fftw_plan_dft_2d(n, n, scratch, scratch, sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
            fftw_free(scratch);
        }
        return plan;
    }

    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

void execute(int n, int sign, std::vector<Complex>& data) {
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan_cache().get(n, sign), buf, buf);
}

} // namespace

Spectrum fft2(const Plane& plane) {
    if (plane.width() != plane.height()) {
        throw Error(ErrorCode::NotSquare, "fft2 needs a square plane, got " +
                                              std::to_string(plane.width()) + "x" +
                                              std::to_string(plane.height()));
    }
    const int n = plane.width();
    Spectrum spectrum(n);
    const auto values = plane.values();
    for (std::size_t i = 0; i < values.size(); ++i) spectrum.data[i] = values[i];
    execute(n, FFTW_FORWARD, spectrum.data);
    return spectrum;
}

std::vector<Complex> ifft2(const Spectrum& spectrum) {
    std::vector<Complex> data = spectrum.data;
    execute(spectrum.size, FFTW_BACKWARD, data);
    const double scale = 1.0 / (static_cast<double>(spectrum.size) * spectrum.size);
    for (auto& v : data) v *= scale;
    return data;
}

Plane ifft2_real(const Spectrum& spectrum) {
    const auto data = ifft2(spectrum);
    Plane out(spectrum.size, spectrum.size);
    auto values = out.values();
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = data[i].real();
    return out;
}

} // namespace painterly
