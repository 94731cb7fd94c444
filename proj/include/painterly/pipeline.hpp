#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "painterly/color_transfer.hpp"
#include "painterly/fusion.hpp"
#include "painterly/image.hpp"
#include "painterly/stroke.hpp"

namespace painterly {

struct RunConfig {
    std::string content_path;
    std::string style_path;
    std::string output_path;
    FusionConfig fusion{};
    int stride = 64;  // brush patch search stride; the window is fusion.patch_size
    bool skip_color_transfer = false;
    std::uint64_t seed = 0;
    bool emit_trace = false;
    std::string trace_dir;     // defaults to the output's directory
    std::string summary_path;  // JSON run summary, optional
    std::string dump_tiles_dir;

    /// Throws Error(InvalidArgument) for empty paths or invalid fusion settings.
    void validate() const;
};

struct StylizeResult {
    RgbImage output;
    ChannelStats content_stats;
    ChannelStats style_stats;
    ChannelStats matched_stats;  // of the Lab image handed to fusion
    LabImage matched;            // post color transfer, pre fusion
    BrushPatch patch;
    int tile_count = 0;
};

/// In-memory pipeline: Lab conversion, statistics transfer, edge
/// enhancement, orientation extraction, brush patch selection, frequency
/// domain fusion and conversion back to sRGB. Deterministic for fixed inputs.
/// Only cfg.fusion, cfg.stride, cfg.skip_color_transfer and cfg.dump_tiles_dir
/// are read; paths are ignored.
StylizeResult stylize_images(const RgbImage& content, const RgbImage& style, const RunConfig& cfg);

/// Loads the inputs, runs stylize_images and writes the output (plus the
/// trace and summary when requested).
StylizeResult stylize(const RunConfig& cfg);

struct AnalyzeConfig {
    std::string style_path;
    std::string out_dir = ".";
    int window = 64;
    int stride = 64;
    bool angle_map = false;
    UsmParams usm{};
    int workers = 1;
};

struct AnalysisResult {
    WindowScan scan;
    BrushPatch patch;
    AngularPowerProfile profile;
    std::string summary;  // one line
};

AnalysisResult analyze_image(const RgbImage& style, const AnalyzeConfig& cfg);

/// Writes patch.png, windows.csv, power_profile.csv and summary.txt (and
/// angle_map.png when requested) into cfg.out_dir.
AnalysisResult analyze(const AnalyzeConfig& cfg);

std::string summary_line(const BrushPatch& patch);

/// JSON run summary: config echo, statistics, patch origin and angle.
std::string run_summary_json(const RunConfig& cfg, const StylizeResult& result);

} // namespace painterly
