#pragma once

#include <array>

#include "painterly/image.hpp"

namespace painterly {

/// Per-channel mean and population standard deviation of a Lab image.
struct ChannelStats {
    std::array<double, 3> mean{};  // L, a, b
    std::array<double, 3> sd{};

    double mean_L() const { return mean[0]; }
    double mean_a() const { return mean[1]; }
    double mean_b() const { return mean[2]; }
    double sd_L() const { return sd[0]; }
    double sd_a() const { return sd[1]; }
    double sd_b() const { return sd[2]; }
};

/// Below this content SD a channel is treated as degenerate: its ratio is 1.
inline constexpr double kDegenerateSd = 1e-6;

struct ColorTransferTrace {
    LabImage centered;             // content minus content means
    LabImage scaled;               // centered times the SD ratio
    std::array<double, 3> ratios{};
    std::array<bool, 3> degenerate{};
};

struct ColorTransferResult {
    LabImage image;
    ColorTransferTrace trace;
};

ChannelStats channel_stats(const LabImage& img);

/// Mean/SD statistics transfer. For every channel c:
///   out = (content - mean_content) * (sd_style / sd_content) + mean_style
/// No clamping happens here; out-of-gamut values survive until lab_to_rgb.
ColorTransferResult transfer_color(const LabImage& content, const ChannelStats& style_stats,
                                   const ChannelStats& content_stats);

} // namespace painterly
