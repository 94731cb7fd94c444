#include "painterly/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "painterly/error.hpp"
#include "painterly/parallel.hpp"

namespace painterly {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Doubled-angle components weighted by magnitude, precomputed once per fusion run.
struct WeightedOrientation {
    Plane x;
    Plane y;
    Plane weight;
};

WeightedOrientation weighted_orientation(const OrientationField& field) {
    WeightedOrientation w{Plane(field.width, field.height), Plane(field.width, field.height),
                          field.magnitude};
    for (int r = 0; r < field.height; ++r) {
        for (int c = 0; c < field.width; ++c) {
            const double t = 2.0 * field.angle(r, c) * kDegToRad;
            const double m = field.magnitude(r, c);
            w.x(r, c) = m * std::cos(t);
            w.y(r, c) = m * std::sin(t);
        }
    }
    return w;
}

std::optional<double> region_orientation(const WeightedOrientation& w, int row, int col, int width,
                                         int height) {
    double x = 0.0, y = 0.0, total = 0.0;
    for (int r = row; r < row + height; ++r) {
        for (int c = col; c < col + width; ++c) {
            x += w.x(r, c);
            y += w.y(r, c);
            total += w.weight(r, c);
        }
    }
    if (!(total > 0.0) || (x == 0.0 && y == 0.0)) return std::nullopt;
    return fold_orientation(0.5 * std::atan2(y, x) * kRadToDeg);
}

struct TileWork {
    TileAnchor anchor;
    double rotation = 0.0;
    Plane input;
    Spectrum input_spectrum;
    Spectrum detail_spectrum;
    Plane filter;
    Spectrum fused;
    Plane output;
};

} // namespace

OverlapFraction parse_overlap(const std::string& text) {
    if (text == "1/8") return OverlapFraction::Eighth;
    if (text == "1/4") return OverlapFraction::Quarter;
    if (text == "1/2") return OverlapFraction::Half;
    throw Error(ErrorCode::InvalidArgument,
                "overlap must be one of 1/8, 1/4, 1/2, got '" + text + "'");
}

std::string to_string(OverlapFraction overlap) {
    return "1/" + std::to_string(overlap_divisor(overlap));
}

int overlap_divisor(OverlapFraction overlap) noexcept {
    switch (overlap) {
    case OverlapFraction::Eighth: return 8;
    case OverlapFraction::Quarter: return 4;
    case OverlapFraction::Half: return 2;
    }
    return 4;
}

int FusionConfig::step() const noexcept {
    return std::max(1, patch_size / overlap_divisor(overlap));
}

void FusionConfig::validate() const {
    if (patch_size < 8) {
        throw Error(ErrorCode::InvalidArgument,
                    "patch size must be at least 8, got " + std::to_string(patch_size));
    }
    if (!(blend_alpha >= 0.0 && blend_alpha <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "blend alpha must lie in [0, 1]");
    }
    if (orientation_window < 1 || orientation_window % 2 == 0) {
        throw Error(ErrorCode::InvalidArgument, "orientation window must be odd and positive");
    }
}

std::vector<int> tile_offsets(int extent, int patch, int step) {
    if (patch > extent) {
        throw Error(ErrorCode::ImageSmallerThanPatch,
                    "image extent " + std::to_string(extent) + " is smaller than patch " +
                        std::to_string(patch));
    }
    if (step < 1) throw Error(ErrorCode::InvalidArgument, "tile step must be positive");
    std::vector<int> offsets;
    for (int o = 0; o + patch <= extent; o += step) offsets.push_back(o);
    if (offsets.back() + patch < extent) offsets.push_back(extent - patch);
    return offsets;
}

int tile_count_along(int extent, int patch, int step) {
    return (extent - patch + step - 1) / step + 1;
}

std::vector<double> hann_window(int n) {
    std::vector<double> w(idx(n));
    for (int i = 0; i < n; ++i) {
        w[idx(i)] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * (i + 0.5) / n));
    }
    return w;
}

TileGrid make_tile_grid(int width, int height, int patch_size, int step) {
    const auto rows = tile_offsets(height, patch_size, step);
    const auto cols = tile_offsets(width, patch_size, step);
    TileGrid grid;
    grid.patch_size = patch_size;
    grid.rows = static_cast<int>(rows.size());
    grid.cols = static_cast<int>(cols.size());
    grid.tiles.reserve(rows.size() * cols.size());
    for (int r : rows) {
        for (int c : cols) grid.tiles.push_back({r, c});
    }
    const auto taps = hann_window(patch_size);
    grid.weight_window = Plane(patch_size, patch_size);
    for (int r = 0; r < patch_size; ++r) {
        for (int c = 0; c < patch_size; ++c) grid.weight_window(r, c) = taps[idx(r)] * taps[idx(c)];
    }
    return grid;
}

Plane stroke_magnitude(const Plane& patch_L, Spectrum* spectrum_out) {
    Plane centered = patch_L;
    double mean = 0.0;
    double scale = 0.0;
    for (double v : centered.values()) {
        mean += v;
        scale = std::max(scale, std::abs(v));
    }
    mean /= static_cast<double>(centered.size());
    for (double& v : centered.values()) v -= mean;

    Spectrum spectrum = fft2(centered);
    const int n = spectrum.size;
    Plane magnitude(n, n);
    double peak = 0.0;
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            if (u == 0 && v == 0) continue;
            magnitude(v, u) = std::abs(spectrum(v, u));
            peak = std::max(peak, magnitude(v, u));
        }
    }
    // Rounding residue of a constant patch is not texture.
    const double floor = 1e-10 * static_cast<double>(n) * n * std::max(1.0, scale);
    if (peak <= floor) {
        for (double& m : magnitude.values()) m = 0.0;
    } else {
        for (double& m : magnitude.values()) m /= peak;
    }
    if (spectrum_out) *spectrum_out = std::move(spectrum);
    return magnitude;
}

StrokeFilter make_stroke_filter(const BrushPatch& patch, int patch_size) {
    if (patch.size != patch_size || patch.L.width() != patch_size ||
        patch.L.height() != patch_size) {
        throw Error(ErrorCode::SizeMismatch, "brush patch is " + std::to_string(patch.size) +
                                                 " but the fusion patch size is " +
                                                 std::to_string(patch_size));
    }
    StrokeFilter filter;
    filter.magnitude = stroke_magnitude(patch.L, &filter.base_spectrum);
    filter.stroke_angle = patch.dominant_angle;
    return filter;
}

Plane rotate_patch(const Plane& patch_L, double degrees) {
    if (patch_L.width() != patch_L.height()) {
        throw Error(ErrorCode::NotSquare, "rotate_patch needs a square plane");
    }
    if (degrees == 0.0) return patch_L;
    const int n = patch_L.width();
    const double center = 0.5 * (n - 1);
    const double cs = std::cos(degrees * kDegToRad);
    const double sn = std::sin(degrees * kDegToRad);
    auto wrap = [n](int i) { return ((i % n) + n) % n; };

    Plane out(n, n);
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            const double dx = x - center;
            const double dy = y - center;
            const double sx = center + cs * dx + sn * dy;
            const double sy = center - sn * dx + cs * dy;
            const double x0 = std::floor(sx);
            const double y0 = std::floor(sy);
            const double fx = sx - x0;
            const double fy = sy - y0;
            const int c0 = wrap(static_cast<int>(x0));
            const int r0 = wrap(static_cast<int>(y0));
            const int c1 = wrap(c0 + 1);
            const int r1 = wrap(r0 + 1);
            out(y, x) = (1.0 - fy) * ((1.0 - fx) * patch_L(r0, c0) + fx * patch_L(r0, c1)) +
                        fy * ((1.0 - fx) * patch_L(r1, c0) + fx * patch_L(r1, c1));
        }
    }
    return out;
}

std::optional<double> mean_orientation(const OrientationField& field, int row, int col, int w,
                                       int h) {
    if (row < 0 || col < 0 || row + h > field.height || col + w > field.width) {
        throw Error(ErrorCode::InvalidArgument, "orientation region outside the field");
    }
    double x = 0.0, y = 0.0, total = 0.0;
    for (int r = row; r < row + h; ++r) {
        for (int c = col; c < col + w; ++c) {
            const double m = field.magnitude(r, c);
            const double t = 2.0 * field.angle(r, c) * kDegToRad;
            x += m * std::cos(t);
            y += m * std::sin(t);
            total += m;
        }
    }
    if (!(total > 0.0) || (x == 0.0 && y == 0.0)) return std::nullopt;
    return fold_orientation(0.5 * std::atan2(y, x) * kRadToDeg);
}

double patch_rotation(std::optional<double> gradient_angle,
                      std::optional<double> stroke_angle) noexcept {
    if (!gradient_angle || !stroke_angle) return 0.0;
    const double target = fold_orientation(*gradient_angle + 90.0);
    return fold_orientation(target - *stroke_angle);
}

Plane fuse_L(const Plane& base, const Plane& detail, const OrientationField& orientation,
             const BrushPatch& patch, const FusionConfig& cfg, const TileObserver& observer) {
    cfg.validate();
    const int width = base.width();
    const int height = base.height();
    const int n = cfg.patch_size;
    if (width < n || height < n) {
        throw Error(ErrorCode::ImageSmallerThanPatch,
                    "image " + std::to_string(width) + "x" + std::to_string(height) +
                        " is smaller than patch " + std::to_string(n));
    }
    if (detail.width() != width || detail.height() != height || orientation.width != width ||
        orientation.height != height) {
        throw Error(ErrorCode::DimensionMismatch, "fusion inputs differ in size");
    }
    const StrokeFilter unrotated = make_stroke_filter(patch, n);
    const TileGrid grid = make_tile_grid(width, height, n, cfg.step());
    const WeightedOrientation weighted = weighted_orientation(orientation);
    const bool shared_detail = &base == &detail;
    const double alpha = cfg.blend_alpha;

    auto process = [&](TileWork& work) {
        const auto [row, col] = work.anchor;
        work.input = base.crop(row, col, n, n);
        work.input_spectrum = fft2(work.input);
        work.detail_spectrum =
            shared_detail ? work.input_spectrum : fft2(detail.crop(row, col, n, n));

        work.rotation =
            patch_rotation(region_orientation(weighted, row, col, n, n), patch.dominant_angle);
        work.filter = work.rotation == 0.0 ? unrotated.magnitude
                                           : stroke_magnitude(rotate_patch(patch.L, work.rotation));

        work.fused = work.input_spectrum;
        for (std::size_t k = 1; k < work.fused.data.size(); ++k) {
            work.fused.data[k] += alpha * work.filter.values()[k] * work.detail_spectrum.data[k];
        }
        work.output = ifft2_real(work.fused);
    };

    Plane accum(width, height);
    Plane weights(width, height);
    const int workers = resolve_workers(cfg.workers);
    const int tile_total = static_cast<int>(grid.tiles.size());
    const int batch = std::max(1, workers) * 8;
    std::vector<TileWork> works(idx(std::min(batch, tile_total)));

    for (int first = 0; first < tile_total; first += batch) {
        const int count = std::min(batch, tile_total - first);
        parallel_for(count, workers, [&](int i) {
            works[idx(i)].anchor = grid.tiles[idx(first + i)];
            process(works[idx(i)]);
        });
        // Accumulation runs in tile order, so the sum is independent of the worker count.
        for (int i = 0; i < count; ++i) {
            const TileWork& work = works[idx(i)];
            const auto [row, col] = work.anchor;
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) {
                    const double w = grid.weight_window(r, c);
                    accum(row + r, col + c) += w * work.output(r, c);
                    weights(row + r, col + c) += w;
                }
            }
            if (observer) {
                observer(TileRecord{first + i, work.anchor, work.rotation, &work.input,
                                    &work.input_spectrum, &work.detail_spectrum, &work.filter,
                                    &work.fused, &work.output});
            }
        }
    }

    Plane out(width, height);
    auto dst = out.values();
    const auto acc = accum.values();
    const auto wsum = weights.values();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = acc[i] / wsum[i];
    return out;
}

Plane fuse_L(const Plane& enhanced_L, const OrientationField& orientation,
             const BrushPatch& patch, const FusionConfig& cfg, const TileObserver& observer) {
    return fuse_L(enhanced_L, enhanced_L, orientation, patch, cfg, observer);
}

LabImage recombine(const Plane& fused_L, const LabImage& original) {
    if (fused_L.width() != original.width() || fused_L.height() != original.height()) {
        throw Error(ErrorCode::DimensionMismatch, "fused L* does not match the chroma planes");
    }
    return LabImage(fused_L, original.a, original.b);
}

} // namespace painterly
