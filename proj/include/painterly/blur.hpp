#pragma once

#include <vector>

#include "painterly/image.hpp"

namespace painterly {

struct BlurParams {
    double sigma = 2.0;

    /// Kernel half-width, ceil(3 sigma).
    int radius() const;
};

/// Normalized 1-D Gaussian taps for offsets [-radius, radius].
/// Throws Error(InvalidSigma) when sigma <= 0.
std::vector<double> gaussian_kernel(const BlurParams& params);

/// Separable Gaussian blur. Borders are mirrored about the half-sample point,
/// which keeps the plane mean unchanged. Output size equals input size.
Plane gaussian_blur(const Plane& plane, const BlurParams& params, int workers = 1);

} // namespace painterly
