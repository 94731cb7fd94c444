#include "painterly/blur.hpp"

#include <cmath>
#include <string>

#include "painterly/error.hpp"
#include "painterly/parallel.hpp"

namespace painterly {

namespace {

// Half-sample symmetric reflection (... c b a | a b c ... c b a | a ...), repeated for kernels
// wider than the plane. The mirrored extension makes the blur conserve the plane's sum.
std::vector<int> reflected_indices(int extent, int radius) {
    std::vector<int> map(static_cast<std::size_t>(extent + 2 * radius));
    const int period = 2 * extent;
    for (int i = -radius; i < extent + radius; ++i) {
        const int m = ((i % period) + period) % period;
        map[static_cast<std::size_t>(i + radius)] = m < extent ? m : period - 1 - m;
    }
    return map;
}

} // namespace

int BlurParams::radius() const {
    return static_cast<int>(std::ceil(3.0 * sigma));
}

std::vector<double> gaussian_kernel(const BlurParams& params) {
    if (!(params.sigma > 0.0)) {
        throw Error(ErrorCode::InvalidSigma,
                    "blur sigma must be positive, got " + std::to_string(params.sigma));
    }
    const int radius = params.radius();
    std::vector<double> taps(static_cast<std::size_t>(2 * radius + 1));
    const double denom = 2.0 * params.sigma * params.sigma;
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double w = std::exp(-static_cast<double>(i * i) / denom);
        taps[static_cast<std::size_t>(i + radius)] = w;
        sum += w;
    }
    for (double& w : taps) w /= sum;
    return taps;
}

Plane gaussian_blur(const Plane& plane, const BlurParams& params, int workers) {
    const auto taps = gaussian_kernel(params);
    const int radius = params.radius();
    const int width = plane.width();
    const int height = plane.height();
    const auto cols = reflected_indices(width, radius);
    const auto rows = reflected_indices(height, radius);

    Plane horizontal(width, height);
    parallel_for(height, workers, [&](int row) {
        for (int col = 0; col < width; ++col) {
            double acc = 0.0;
            for (int k = -radius; k <= radius; ++k) {
                const auto src = cols[static_cast<std::size_t>(col + k + radius)];
                acc += taps[static_cast<std::size_t>(k + radius)] * plane(row, src);
            }
            horizontal(row, col) = acc;
        }
    });

    Plane out(width, height);
    parallel_for(height, workers, [&](int row) {
        for (int col = 0; col < width; ++col) {
            double acc = 0.0;
            for (int k = -radius; k <= radius; ++k) {
                const auto src = rows[static_cast<std::size_t>(row + k + radius)];
                acc += taps[static_cast<std::size_t>(k + radius)] * horizontal(src, col);
            }
            out(row, col) = acc;
        }
    });
    return out;
}

} // namespace painterly
