#pragma once

#include "painterly/blur.hpp"
#include "painterly/image.hpp"

namespace painterly {

/// Unsharp-mask parameters. The weight is validated on construction and must
/// lie in [0.1, 0.9].
class UsmParams {
public:
    static constexpr double kDefaultWeight = 0.6;
    static constexpr double kMinWeight = 0.1;
    static constexpr double kMaxWeight = 0.9;

    UsmParams() = default;
    UsmParams(double weight, BlurParams blur);

    double weight() const noexcept { return weight_; }
    const BlurParams& blur() const noexcept { return blur_; }

private:
    double weight_ = kDefaultWeight;
    BlurParams blur_{};
};

/// Gradient direction (degrees, modulo 180) and strength per pixel.
struct OrientationField {
    int width = 0;
    int height = 0;
    Plane magnitude;
    Plane angle;
};

/// (D1 - w * blur(D1)) / (1 - w). Not clamped.
Plane usm_sharpen(const Plane& plane, const UsmParams& params, int workers = 1);

/// 3x3 Sobel gradient with replicated borders; angle = atan2(gy, gx) folded
/// into [0, 180), x to the right and y down the rows.
/// Throws Error(TooSmall) for planes under 3x3.
OrientationField gradient_field(const Plane& plane, int workers = 1);

/// Doubled-angle (structure tensor) averaging over a window x window
/// neighbourhood weighted by magnitude. The output magnitude is the
/// coherence |sum m (cos 2t, sin 2t)| / sum m of the window, in [0, 1].
/// Throws Error(InvalidArgument) for even or non-positive windows.
OrientationField smooth_orientations(const OrientationField& field, int window,
                                     int workers = 1);

/// Folds any angle in degrees into [0, 180).
double fold_orientation(double degrees) noexcept;

} // namespace painterly
