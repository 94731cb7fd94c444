#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "painterly/edge.hpp"
#include "painterly/fft.hpp"
#include "painterly/image.hpp"
#include "painterly/stroke.hpp"

namespace painterly {

/// How far the stroke tile moves between neighbouring positions, as a
/// fraction of the patch size.
enum class OverlapFraction { Eighth, Quarter, Half };

/// Parses "1/8", "1/4" or "1/2"; throws Error(InvalidArgument) otherwise.
OverlapFraction parse_overlap(const std::string& text);
std::string to_string(OverlapFraction overlap);
int overlap_divisor(OverlapFraction overlap) noexcept;

struct FusionConfig {
    int patch_size = 64;
    OverlapFraction overlap = OverlapFraction::Quarter;
    double blend_alpha = 0.5;
    UsmParams usm{};
    int orientation_window = 9;
    int workers = 1;

    /// Tile step in pixels: patch_size / divisor, at least 1.
    int step() const noexcept;

    /// Throws Error(InvalidArgument) unless patch_size >= 8, alpha in [0,1]
    /// and orientation_window is odd and positive.
    void validate() const;
};

struct TileAnchor {
    int row = 0;
    int col = 0;
};

struct TileGrid {
    int patch_size = 0;
    int rows = 0;  // anchors vertically
    int cols = 0;  // anchors horizontally
    std::vector<TileAnchor> tiles;  // row-major
    Plane weight_window;            // 2-D Hann, strictly positive
};

/// Anchors along one axis: 0, step, 2 step, ... plus a final anchor clamped
/// to extent - patch when the regular ones stop short of the edge.
std::vector<int> tile_offsets(int extent, int patch, int step);

/// ceil((extent - patch) / step) + 1.
int tile_count_along(int extent, int patch, int step);

/// Half-sample-offset Hann taps, positive at every sample.
std::vector<double> hann_window(int n);

TileGrid make_tile_grid(int width, int height, int patch_size, int step);

struct StrokeFilter {
    Spectrum base_spectrum;  // spectrum of the zero-mean patch
    Plane magnitude;         // |spectrum| / max, DC forced to 0
    std::optional<double> stroke_angle;
};

/// Spectrum modulus of a zero-mean square plane, DC zeroed, scaled to unit
/// maximum. All zeros for constant input.
Plane stroke_magnitude(const Plane& patch_L, Spectrum* spectrum_out = nullptr);

/// Throws Error(SizeMismatch) when patch.size != patch_size.
StrokeFilter make_stroke_filter(const BrushPatch& patch, int patch_size);

/// Rotates a square plane by `degrees` about its center with bilinear
/// sampling. The plane is treated as periodic, so samples falling outside
/// wrap around. Positive angles turn a stroke at angle t into t + degrees in
/// the x-right / y-down image frame.
Plane rotate_patch(const Plane& patch_L, double degrees);

/// Magnitude-weighted doubled-angle mean of a region of the field.
/// Empty when the region carries no weight.
std::optional<double> mean_orientation(const OrientationField& field, int row, int col, int w,
                                       int h);

/// Rotation applied to the brush patch for a tile whose gradient orientation
/// is `gradient_angle`: strokes run perpendicular to the gradient. Zero when
/// either angle is unknown.
double patch_rotation(std::optional<double> gradient_angle,
                      std::optional<double> stroke_angle) noexcept;

/// Everything computed for one tile, handed to an observer in tile order.
struct TileRecord {
    int index = 0;
    TileAnchor anchor;
    double rotation = 0.0;
    const Plane* input = nullptr;            // base tile
    const Spectrum* input_spectrum = nullptr;   // fft2 of base tile
    const Spectrum* detail_spectrum = nullptr;  // fft2 of detail tile
    const Plane* filter = nullptr;           // |P| of the rotated patch
    const Spectrum* fused_spectrum = nullptr;
    const Plane* output = nullptr;           // real part of ifft2(fused)
};

using TileObserver = std::function<void(const TileRecord&)>;

/// Injects brush-stroke texture into an L* plane tile by tile in the
/// frequency domain and overlap-adds the tiles with Hann weights.
///
/// Per tile: the brush patch is rotated so its strokes run perpendicular to
/// the local gradient, P is its unit-max zero-DC spectrum modulus, and
///   G = F_base + blend_alpha * |P| * F_detail   (off DC; DC = F_base DC).
/// `base` supplies the values that are kept and `detail` the spectrum that
/// carries the injected texture; the single-plane overload uses the same
/// plane for both. Output is independent of cfg.workers.
///
/// Throws Error(ImageSmallerThanPatch) and Error(DimensionMismatch).
Plane fuse_L(const Plane& base, const Plane& detail, const OrientationField& orientation,
             const BrushPatch& patch, const FusionConfig& cfg,
             const TileObserver& observer = {});

Plane fuse_L(const Plane& enhanced_L, const OrientationField& orientation,
             const BrushPatch& patch, const FusionConfig& cfg,
             const TileObserver& observer = {});

/// Replaces L, keeps a* and b* untouched. Throws Error(DimensionMismatch).
LabImage recombine(const Plane& fused_L, const LabImage& original);

} // namespace painterly
