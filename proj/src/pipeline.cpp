#include "painterly/pipeline.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "painterly/color.hpp"
#include "painterly/edge.hpp"
#include "painterly/error.hpp"
#include "painterly/image_io.hpp"

namespace painterly {

namespace fs = std::filesystem;

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_text(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    return out;
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
}

nlohmann::json stats_json(const ChannelStats& s) {
    return {{"mean", {{"L", s.mean[0]}, {"a", s.mean[1]}, {"b", s.mean[2]}}},
            {"sd", {{"L", s.sd[0]}, {"a", s.sd[1]}, {"b", s.sd[2]}}}};
}

RgbImage crop_rgb(const RgbImage& img, int row, int col, int size) {
    RgbImage out(size, size);
    for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) {
            const auto* src = img.pixel(row + r, col + c);
            auto* dst = out.pixel(r, c);
            dst[0] = src[0];
            dst[1] = src[1];
            dst[2] = src[2];
        }
    }
    return out;
}

struct PipelineState {
    StylizeResult result;
    std::optional<ColorTransferTrace> trace;
    Plane enhanced;
    OrientationField orientation;
};

PipelineState run_pipeline(const RgbImage& content, const RgbImage& style, const RunConfig& cfg) {
    const FusionConfig& fusion = cfg.fusion;
    fusion.validate();
    if (cfg.stride < 1) throw Error(ErrorCode::InvalidArgument, "stride must be positive");
    if (content.width() < fusion.patch_size || content.height() < fusion.patch_size) {
        throw Error(ErrorCode::ImageSmallerThanPatch,
                    "content image is smaller than the patch size " +
                        std::to_string(fusion.patch_size));
    }
    const int workers = fusion.workers;
    PipelineState state;
    StylizeResult& result = state.result;

    const LabImage content_lab = rgb_to_lab(content, workers);
    const LabImage style_lab = rgb_to_lab(style, workers);
    result.content_stats = channel_stats(content_lab);
    result.style_stats = channel_stats(style_lab);

    if (cfg.skip_color_transfer) {
        result.matched = content_lab;
    } else {
        auto transferred = transfer_color(content_lab, result.style_stats, result.content_stats);
        result.matched = std::move(transferred.image);
        state.trace = std::move(transferred.trace);
    }
    result.matched_stats = channel_stats(result.matched);

    // Texture source for fusion, and the blurred-then-enhanced plane that steers it.
    state.enhanced = usm_sharpen(result.matched.L, fusion.usm, workers);
    const Plane steering =
        usm_sharpen(gaussian_blur(result.matched.L, fusion.usm.blur(), workers), fusion.usm, workers);
    state.orientation =
        smooth_orientations(gradient_field(steering, workers), fusion.orientation_window, workers);

    result.patch = select_brush_patch(style_lab, fusion.patch_size, cfg.stride, workers);

    TileObserver observer;
    if (!cfg.dump_tiles_dir.empty()) {
        ensure_dir(cfg.dump_tiles_dir);
        observer = [dir = fs::path(cfg.dump_tiles_dir)](const TileRecord& tile) {
            char name[64];
            std::snprintf(name, sizeof name, "tile_%05d_before.png", tile.index);
            save_plane(*tile.input, (dir / name).string(), 0.0, 100.0);
            std::snprintf(name, sizeof name, "tile_%05d_after.png", tile.index);
            save_plane(*tile.output, (dir / name).string(), 0.0, 100.0);
        };
    }
    int tiles = 0;
    const TileObserver counting = [&](const TileRecord& tile) {
        ++tiles;
        if (observer) observer(tile);
    };
    const Plane fused =
        fuse_L(result.matched.L, state.enhanced, state.orientation, result.patch, fusion, counting);
    result.tile_count = tiles;
    result.output = lab_to_rgb(recombine(fused, result.matched), workers);
    return state;
}

void write_trace(const fs::path& dir, const RunConfig& cfg, const PipelineState& state,
                 const RgbImage& style) {
    ensure_dir(dir);
    const StylizeResult& result = state.result;
    save_image(lab_to_rgb(result.matched), (dir / "matched.png").string());
    save_plane(state.enhanced, (dir / "enhanced_L.png").string(), 0.0, 100.0);
    save_plane(state.orientation.angle, (dir / "orientation.png").string(), 0.0, 180.0);
    save_image(crop_rgb(style, result.patch.row, result.patch.col, result.patch.size),
               (dir / "patch.png").string());

    // Full-precision post-transfer Lab values, so the logged statistics can be re-derived.
    auto csv = open_text(dir / "matched_lab.csv");
    csv << "row,col,L,a,b\n";
    const LabImage& m = result.matched;
    for (int r = 0; r < m.height(); ++r) {
        for (int c = 0; c < m.width(); ++c) {
            csv << r << ',' << c << ',' << format_double(m.L(r, c)) << ','
                << format_double(m.a(r, c)) << ',' << format_double(m.b(r, c)) << '\n';
        }
    }

    nlohmann::json trace = {
        {"skip_color_transfer", cfg.skip_color_transfer},
        {"content_stats", stats_json(result.content_stats)},
        {"style_stats", stats_json(result.style_stats)},
        {"matched_stats", stats_json(result.matched_stats)},
    };
    if (state.trace) {
        trace["ratios"] = state.trace->ratios;
        trace["degenerate"] = state.trace->degenerate;
        trace["centered_stats"] = stats_json(channel_stats(state.trace->centered));
        trace["scaled_stats"] = stats_json(channel_stats(state.trace->scaled));
    }
    open_text(dir / "trace.json") << trace.dump(2) << '\n';
}

} // namespace

void RunConfig::validate() const {
    if (content_path.empty() || style_path.empty() || output_path.empty()) {
        throw Error(ErrorCode::InvalidArgument, "content, style and output paths are required");
    }
    if (stride < 1) throw Error(ErrorCode::InvalidArgument, "stride must be positive");
    fusion.validate();
}

StylizeResult stylize_images(const RgbImage& content, const RgbImage& style, const RunConfig& cfg) {
    return run_pipeline(content, style, cfg).result;
}

StylizeResult stylize(const RunConfig& cfg) {
    cfg.validate();
    const RgbImage content = load_image(cfg.content_path);
    const RgbImage style = load_image(cfg.style_path);
    PipelineState state = run_pipeline(content, style, cfg);
    save_image(state.result.output, cfg.output_path);

    if (cfg.emit_trace) {
        fs::path dir = cfg.trace_dir;
        if (dir.empty()) {
            const fs::path out(cfg.output_path);
            dir = out.parent_path() / (out.stem().string() + "_trace");
        }
        write_trace(dir, cfg, state, style);
    }
    if (!cfg.summary_path.empty()) {
        open_text(cfg.summary_path) << run_summary_json(cfg, state.result) << '\n';
    }
    return std::move(state.result);
}

std::string summary_line(const BrushPatch& patch) {
    std::ostringstream line;
    line << "origin=(" << patch.row << "," << patch.col << ") sd=" << std::setprecision(10)
         << patch.sd << " dominant_angle=";
    if (patch.dominant_angle) {
        line << *patch.dominant_angle;
    } else {
        line << "none";
    }
    return line.str();
}

std::string run_summary_json(const RunConfig& cfg, const StylizeResult& result) {
    const auto& f = cfg.fusion;
    nlohmann::json summary = {
        {"config",
         {{"content", cfg.content_path},
          {"style", cfg.style_path},
          {"output", cfg.output_path},
          {"patch_size", f.patch_size},
          {"stride", cfg.stride},
          {"overlap", to_string(f.overlap)},
          {"alpha", f.blend_alpha},
          {"usm_weight", f.usm.weight()},
          {"usm_sigma", f.usm.blur().sigma},
          {"orientation_window", f.orientation_window},
          {"skip_color_transfer", cfg.skip_color_transfer},
          {"seed", cfg.seed}}},
        {"content_stats", stats_json(result.content_stats)},
        {"style_stats", stats_json(result.style_stats)},
        {"matched_stats", stats_json(result.matched_stats)},
        {"patch",
         {{"row", result.patch.row},
          {"col", result.patch.col},
          {"size", result.patch.size},
          {"sd", result.patch.sd},
          {"dominant_angle", result.patch.dominant_angle
                                 ? nlohmann::json(*result.patch.dominant_angle)
                                 : nlohmann::json(nullptr)}}},
        {"tiles", result.tile_count},
        {"output_size", {result.output.width(), result.output.height()}},
    };
    return summary.dump(2);
}

AnalysisResult analyze_image(const RgbImage& style, const AnalyzeConfig& cfg) {
    const LabImage lab = rgb_to_lab(style, cfg.workers);
    AnalysisResult result;
    result.scan = scan_windows(lab.L, cfg.window, cfg.stride, cfg.workers);
    result.patch = select_brush_patch(lab, cfg.window, cfg.stride, cfg.workers);
    if (cfg.window >= 8) result.profile = angular_power_profile(result.patch.L);
    result.summary = summary_line(result.patch);
    return result;
}

AnalysisResult analyze(const AnalyzeConfig& cfg) {
    const RgbImage style = load_image(cfg.style_path);
    AnalysisResult result = analyze_image(style, cfg);

    const fs::path dir = cfg.out_dir.empty() ? fs::path(".") : fs::path(cfg.out_dir);
    ensure_dir(dir);
    save_image(crop_rgb(style, result.patch.row, result.patch.col, result.patch.size),
               (dir / "patch.png").string());

    auto windows = open_text(dir / "windows.csv");
    windows << "row,col,sd\n";
    for (const auto& e : result.scan.entries) {
        windows << e.row << ',' << e.col << ',' << format_double(e.sd) << '\n';
    }

    auto profile = open_text(dir / "power_profile.csv");
    profile << "degree,power,count\n";
    for (int k = 0; k < kAngleBins; ++k) {
        const auto i = static_cast<std::size_t>(k);
        profile << k << ',' << format_double(result.profile.bins[i]) << ','
                << result.profile.counts[i] << '\n';
    }

    open_text(dir / "summary.txt") << result.summary << '\n';

    if (cfg.angle_map) {
        const LabImage lab = rgb_to_lab(style, cfg.workers);
        const OrientationField field =
            gradient_field(usm_sharpen(lab.L, cfg.usm, cfg.workers), cfg.workers);
        save_plane(field.angle, (dir / "angle_map.png").string(), 0.0, 180.0);
    }
    return result;
}

} // namespace painterly
