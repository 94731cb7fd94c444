#include "painterly/stroke.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "painterly/error.hpp"
#include "painterly/fft.hpp"
#include "painterly/parallel.hpp"

namespace painterly {

int window_positions(int extent, int window, int stride) {
    return (extent - window) / stride + 1;
}

double window_sd(const Plane& plane, int row, int col, int w, int h) {
    // Shifting by one sample makes constant windows exactly zero.
    const double shift = plane(row, col);
    double sum = 0.0;
    for (int r = row; r < row + h; ++r) {
        for (int c = col; c < col + w; ++c) sum += plane(r, c) - shift;
    }
    const double n = static_cast<double>(w) * h;
    const double mean = sum / n;
    double sq = 0.0;
    for (int r = row; r < row + h; ++r) {
        for (int c = col; c < col + w; ++c) {
            const double d = plane(r, c) - shift - mean;
            sq += d * d;
        }
    }
    return std::sqrt(sq / n);
}

WindowScan scan_windows(const Plane& plane, int window, int stride, int workers) {
    if (window < 1 || stride < 1) {
        throw Error(ErrorCode::InvalidArgument, "window and stride must be positive");
    }
    if (window > plane.width() || window > plane.height()) {
        throw Error(ErrorCode::WindowTooLarge,
                    "window " + std::to_string(window) + " exceeds image " +
                        std::to_string(plane.width()) + "x" + std::to_string(plane.height()));
    }
    WindowScan scan;
    scan.window_w = window;
    scan.window_h = window;
    scan.stride = stride;
    scan.rows = window_positions(plane.height(), window, stride);
    scan.cols = window_positions(plane.width(), window, stride);
    scan.entries.resize(static_cast<std::size_t>(scan.rows) * scan.cols);
    parallel_for(static_cast<int>(scan.entries.size()), workers, [&](int i) {
        const int row = (i / scan.cols) * stride;
        const int col = (i % scan.cols) * stride;
        scan.entries[static_cast<std::size_t>(i)] = {row, col, window_sd(plane, row, col, window, window)};
    });
    return scan;
}

BrushPatch select_brush_patch(const LabImage& painting, int window, int stride, int workers) {
    const WindowScan scan = scan_windows(painting.L, window, stride, workers);
    // Entries are in row-major order, so a strict comparison keeps the
    // lexicographically smallest origin among ties.
    const WindowEntry* best = &scan.entries.front();
    for (const auto& entry : scan.entries) {
        if (entry.sd < best->sd) best = &entry;
    }
    BrushPatch patch;
    patch.size = window;
    patch.row = best->row;
    patch.col = best->col;
    patch.sd = best->sd;
    patch.L = painting.L.crop(best->row, best->col, window, window);
    if (window >= 8) {
        patch.dominant_angle = dominant_angle(angular_power_profile(patch.L));
    }
    return patch;
}

AngularPowerProfile angular_power_profile(const Plane& patch) {
    if (patch.width() != patch.height()) {
        throw Error(ErrorCode::NotSquare, "angular power profile needs a square patch");
    }
    const int n = patch.width();
    if (n < 8) throw Error(ErrorCode::TooSmall, "angular power profile needs a side of at least 8");

    Plane centered = patch;
    double mean = 0.0;
    for (double v : centered.values()) mean += v;
    mean /= static_cast<double>(centered.size());
    for (double& v : centered.values()) v -= mean;

    const Spectrum spectrum = fft2(centered);
    AngularPowerProfile profile;
    std::array<double, kAngleBins> sums{};
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            if (u == 0 && v == 0) continue;
            const double fu = centered_frequency(u, n);
            const double fv = centered_frequency(v, n);
            double theta = std::atan2(fv, fu) * 180.0 / std::numbers::pi;
            int bin = static_cast<int>(std::lround(theta)) % 180;
            if (bin < 0) bin += 180;
            sums[static_cast<std::size_t>(bin)] += std::norm(spectrum(v, u));
            ++profile.counts[static_cast<std::size_t>(bin)];
        }
    }
    for (std::size_t k = 0; k < sums.size(); ++k) {
        profile.bins[k] = profile.counts[k] ? sums[k] / static_cast<double>(profile.counts[k]) : 0.0;
    }
    return profile;
}

std::optional<double> dominant_angle(const AngularPowerProfile& profile) {
    double total = 0.0;
    int populated = 0;
    std::size_t peak = 0;
    for (std::size_t k = 0; k < profile.bins.size(); ++k) {
        if (profile.counts[k] == 0) continue;
        total += profile.bins[k];
        ++populated;
        if (profile.bins[k] > profile.bins[peak]) peak = k;
    }
    if (populated == 0) return std::nullopt;
    const double mean = total / populated;
    const double max = profile.bins[peak];
    if (!(max > 0.0) || max < kDominanceRatio * mean) return std::nullopt;
    return static_cast<double>((peak + 90) % 180);
}

} // namespace painterly
