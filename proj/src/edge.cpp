#include "painterly/edge.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "painterly/error.hpp"
#include "painterly/parallel.hpp"

namespace painterly {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;
constexpr double kDegToRad = std::numbers::pi / 180.0;

} // namespace

UsmParams::UsmParams(double weight, BlurParams blur) : weight_(weight), blur_(blur) {
    if (!(weight >= kMinWeight && weight <= kMaxWeight)) {
        throw Error(ErrorCode::InvalidArgument,
                    "USM weight must lie in [0.1, 0.9], got " + std::to_string(weight));
    }
    if (!(blur.sigma > 0.0)) {
        throw Error(ErrorCode::InvalidSigma, "USM blur sigma must be positive");
    }
}

double fold_orientation(double degrees) noexcept {
    double folded = std::fmod(degrees, 180.0);
    if (folded < 0.0) folded += 180.0;
    // fmod of a tiny negative value can round back up to exactly 180.
    if (folded >= 180.0) folded = 0.0;
    return folded;
}

Plane usm_sharpen(const Plane& plane, const UsmParams& params, int workers) {
    const Plane blurred = gaussian_blur(plane, params.blur(), workers);
    const double w = params.weight();
    const double inv = 1.0 / (1.0 - w);
    Plane out(plane.width(), plane.height());
    const auto src = plane.values();
    const auto smooth = blurred.values();
    auto dst = out.values();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = (src[i] - w * smooth[i]) * inv;
    }
    return out;
}

OrientationField gradient_field(const Plane& plane, int workers) {
    const int width = plane.width();
    const int height = plane.height();
    if (width < 3 || height < 3) {
        throw Error(ErrorCode::TooSmall, "gradient_field needs at least a 3x3 plane");
    }
    OrientationField field{width, height, Plane(width, height), Plane(width, height)};
    parallel_for(height, workers, [&](int r) {
        for (int c = 0; c < width; ++c) {
            const double tl = plane.clamped(r - 1, c - 1);
            const double t = plane.clamped(r - 1, c);
            const double tr = plane.clamped(r - 1, c + 1);
            const double l = plane.clamped(r, c - 1);
            const double rt = plane.clamped(r, c + 1);
            const double bl = plane.clamped(r + 1, c - 1);
            const double b = plane.clamped(r + 1, c);
            const double br = plane.clamped(r + 1, c + 1);
            const double gx = (tr + 2.0 * rt + br) - (tl + 2.0 * l + bl);
            const double gy = (bl + 2.0 * b + br) - (tl + 2.0 * t + tr);
            field.magnitude(r, c) = std::hypot(gx, gy);
            field.angle(r, c) = fold_orientation(std::atan2(gy, gx) * kRadToDeg);
        }
    });
    return field;
}

OrientationField smooth_orientations(const OrientationField& field, int window, int workers) {
    if (window < 1 || window % 2 == 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "orientation window must be odd and positive, got " + std::to_string(window));
    }
    const int width = field.width;
    const int height = field.height;
    const int half = window / 2;

    // Doubled-angle unit vectors, so 1 and 179 degrees average towards 0.
    Plane cos2(width, height);
    Plane sin2(width, height);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            const double t = 2.0 * field.angle(r, c) * kDegToRad;
            cos2(r, c) = std::cos(t);
            sin2(r, c) = std::sin(t);
        }
    }

    OrientationField out{width, height, Plane(width, height), Plane(width, height)};
    parallel_for(height, workers, [&](int r) {
        for (int c = 0; c < width; ++c) {
            double wx = 0.0, wy = 0.0, wsum = 0.0;
            double ux = 0.0, uy = 0.0;
            for (int dr = -half; dr <= half; ++dr) {
                for (int dc = -half; dc <= half; ++dc) {
                    const int rr = r + dr;
                    const int cc = c + dc;
                    if (rr < 0 || rr >= height || cc < 0 || cc >= width) continue;
                    const double m = field.magnitude(rr, cc);
                    wx += m * cos2(rr, cc);
                    wy += m * sin2(rr, cc);
                    wsum += m;
                    ux += cos2(rr, cc);
                    uy += sin2(rr, cc);
                }
            }
            double x = wx, y = wy;
            if (wsum <= 0.0 || (wx == 0.0 && wy == 0.0)) {
                // No gradient energy: fall back to the plain doubled-angle mean.
                x = ux;
                y = uy;
            }
            if (x == 0.0 && y == 0.0) {
                out.angle(r, c) = field.angle(r, c);
            } else {
                out.angle(r, c) = fold_orientation(0.5 * std::atan2(y, x) * kRadToDeg);
            }
            out.magnitude(r, c) = wsum > 0.0 ? std::hypot(wx, wy) / wsum : 0.0;
        }
    });
    return out;
}

} // namespace painterly
