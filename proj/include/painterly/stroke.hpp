#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "painterly/image.hpp"

namespace painterly {

struct WindowEntry {
    int row = 0;
    int col = 0;
    double sd = 0.0;
};

/// Standard deviations of every grid-aligned window of a plane.
struct WindowScan {
    int window_w = 0;
    int window_h = 0;
    int stride = 0;
    int rows = 0;  // grid positions vertically
    int cols = 0;  // grid positions horizontally
    std::vector<WindowEntry> entries;  // row-major over the grid
};

/// Number of grid positions along one axis: floor((extent - window) / stride) + 1.
int window_positions(int extent, int window, int stride);

/// Population SD of the w x h window anchored at (row, col).
double window_sd(const Plane& plane, int row, int col, int w, int h);

/// Throws Error(WindowTooLarge) if the window exceeds the plane, and
/// Error(InvalidArgument) for non-positive window or stride.
WindowScan scan_windows(const Plane& plane, int window, int stride, int workers = 1);

struct BrushPatch {
    int size = 0;
    Plane L;
    int row = 0;
    int col = 0;
    double sd = 0.0;
    std::optional<double> dominant_angle;  // stroke orientation, degrees in [0,180)
};

/// Picks the lowest-SD window of the painting's L* plane; ties go to the
/// smallest (row, col). The dominant stroke angle is filled in.
BrushPatch select_brush_patch(const LabImage& painting, int window, int stride, int workers = 1);

inline constexpr int kAngleBins = 180;

/// Mean power |F|^2 per 1-degree frequency orientation bin.
struct AngularPowerProfile {
    std::array<double, kAngleBins> bins{};
    std::array<std::size_t, kAngleBins> counts{};
};

/// Throws Error(NotSquare) for non-square planes and Error(TooSmall) below 8x8.
AngularPowerProfile angular_power_profile(const Plane& patch);

/// A profile with max bin below this multiple of the mean bin has no dominant direction.
inline constexpr double kDominanceRatio = 2.0;

/// Stroke orientation in image space: the peak frequency orientation turned
/// by 90 degrees. Empty when no bin dominates.
std::optional<double> dominant_angle(const AngularPowerProfile& profile);

} // namespace painterly
