#include "painterly/color_transfer.hpp"

#include <cmath>

#include "painterly/error.hpp"

namespace painterly {

namespace {

// Two-pass mean and population SD. Summation order is fixed (row-major), so
// the result is reproducible regardless of how callers parallelise.
void plane_stats(const Plane& plane, double& mean, double& sd) {
    const auto values = plane.values();
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    mean = sum / n;
    double sq = 0.0;
    for (double v : values) {
        const double d = v - mean;
        sq += d * d;
    }
    sd = std::sqrt(sq / n);
}

const Plane& channel(const LabImage& img, int c) {
    return c == 0 ? img.L : (c == 1 ? img.a : img.b);
}

Plane& channel(LabImage& img, int c) {
    return c == 0 ? img.L : (c == 1 ? img.a : img.b);
}

} // namespace

ChannelStats channel_stats(const LabImage& img) {
    if (img.L.empty()) throw Error(ErrorCode::InvalidArgument, "channel_stats of an empty image");
    ChannelStats stats;
    for (int c = 0; c < 3; ++c) {
        plane_stats(channel(img, c), stats.mean[static_cast<std::size_t>(c)],
                    stats.sd[static_cast<std::size_t>(c)]);
    }
    return stats;
}

ColorTransferResult transfer_color(const LabImage& content, const ChannelStats& style_stats,
                                   const ChannelStats& content_stats) {
    ColorTransferResult result{LabImage(content.width(), content.height()), {}};
    auto& trace = result.trace;
    trace.centered = LabImage(content.width(), content.height());
    trace.scaled = LabImage(content.width(), content.height());

    for (int c = 0; c < 3; ++c) {
        const auto ci = static_cast<std::size_t>(c);
        const bool degenerate = content_stats.sd[ci] < kDegenerateSd;
        const double ratio = degenerate ? 1.0 : style_stats.sd[ci] / content_stats.sd[ci];
        trace.ratios[ci] = ratio;
        trace.degenerate[ci] = degenerate;

        const auto src = channel(content, c).values();
        auto centered = channel(trace.centered, c).values();
        auto scaled = channel(trace.scaled, c).values();
        auto out = channel(result.image, c).values();
        const double content_mean = content_stats.mean[ci];
        const double style_mean = style_stats.mean[ci];
        for (std::size_t i = 0; i < src.size(); ++i) {
            // A degenerate channel collapses onto the style mean.
            centered[i] = degenerate ? 0.0 : src[i] - content_mean;
            scaled[i] = centered[i] * ratio;
            out[i] = scaled[i] + style_mean;
        }
    }
    return result;
}

} // namespace painterly
