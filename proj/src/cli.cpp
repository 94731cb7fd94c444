#include "painterly/cli.hpp"

#include <iostream>

#include <CLI11.hpp>

#include "painterly/error.hpp"

namespace painterly {

namespace {

struct RawOptions {
    std::string content, style, output;
    int patch_size = 64;
    int stride = 64;
    std::string overlap = "1/4";
    double alpha = 0.5;
    double usm_weight = UsmParams::kDefaultWeight;
    double usm_sigma = 2.0;
    int orientation_window = 9;
    int workers = 1;
    bool skip_color_transfer = false;
    std::uint64_t seed = 0;
    bool trace = false;
    std::string trace_dir, summary, dump_tiles;

    std::string a_style, a_out = ".";
    int a_window = 64;
    int a_stride = 64;
    bool a_angle_map = false;
    double a_usm_weight = UsmParams::kDefaultWeight;
    double a_usm_sigma = 2.0;
    int a_workers = 1;
};

void add_common(CLI::App* sub, double& weight, double& sigma, int& workers) {
    sub->add_option("--usm-weight", weight, "Unsharp-mask weight w in [0.1, 0.9]")
        ->capture_default_str();
    sub->add_option("--usm-sigma", sigma, "Gaussian blur sigma for unsharp masking, pixels")
        ->capture_default_str();
    sub->add_option("--workers", workers, "Worker threads, 0 = all cores (results do not depend on it)")
        ->capture_default_str();
}

UsmParams make_usm(double weight, double sigma) {
    if (!(sigma > 0.0)) throw Error(ErrorCode::Usage, "--usm-sigma must be positive");
    try {
        return UsmParams(weight, BlurParams{sigma});
    } catch (const Error& e) {
        throw Error(ErrorCode::Usage, e.what());
    }
}

} // namespace

CliInvocation parse_cli(const std::vector<std::string>& args) {
    CLI::App app{"Render a photo in the style of an impressionist painting by Lab colour "
                 "statistics transfer and frequency-domain brush-stroke fusion.",
                 "painterly"};
    app.require_subcommand(1);
    RawOptions o;

    auto* stylize = app.add_subcommand("stylize", "Stylize a photo with a reference painting");
    stylize->add_option("-c,--content", o.content, "Content photo (PNG or JPEG)")->required();
    stylize->add_option("-s,--style", o.style, "Reference painting (PNG or JPEG)")->required();
    stylize->add_option("-o,--output", o.output, "Output PNG")->required();
    stylize->add_option("--patch-size", o.patch_size, "Brush patch side in pixels")
        ->capture_default_str();
    stylize->add_option("--stride", o.stride, "Brush patch search stride in pixels")
        ->capture_default_str();
    stylize->add_option("--overlap", o.overlap,
                        "Tile step as a fraction of the patch: 1/8, 1/4 or 1/2")
        ->capture_default_str();
    stylize->add_option("--alpha", o.alpha, "Texture blend strength in [0, 1]")
        ->capture_default_str();
    stylize->add_option("--orientation-window", o.orientation_window,
                        "Odd window for orientation smoothing, pixels")
        ->capture_default_str();
    add_common(stylize, o.usm_weight, o.usm_sigma, o.workers);
    stylize->add_flag("--skip-color-transfer", o.skip_color_transfer,
                      "Keep the photo's own colour statistics");
    stylize->add_option("--seed", o.seed, "Seed recorded in the run summary")->capture_default_str();
    stylize->add_flag("--trace", o.trace, "Write intermediate images and transfer statistics");
    stylize->add_option("--trace-dir", o.trace_dir, "Directory for --trace output");
    stylize->add_option("--summary", o.summary, "Write a JSON run summary to this path");
    stylize->add_option("--dump-tiles", o.dump_tiles, "Write per-tile before/after PNGs here");

    auto* analyze = app.add_subcommand("analyze", "Select and analyse the brush patch of a painting");
    analyze->add_option("-s,--style", o.a_style, "Painting (PNG or JPEG)")->required();
    analyze->add_option("-o,--out-dir", o.a_out, "Output directory")->capture_default_str();
    analyze->add_option("--window", o.a_window, "Window side in pixels")
        ->capture_default_str();
    analyze->add_option("--stride", o.a_stride, "Window stride in pixels")
        ->capture_default_str();
    analyze->add_flag("--angle-map", o.a_angle_map, "Also write the gradient angle map as PNG");
    add_common(analyze, o.a_usm_weight, o.a_usm_sigma, o.a_workers);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CliInvocation help;
        help.help_text = app.help("", CLI::AppFormatMode::All);
        return help;
    } catch (const CLI::ParseError& e) {
        throw Error(ErrorCode::Usage, e.what());
    }

    CliInvocation inv;
    if (stylize->parsed()) {
        inv.command = Subcommand::Stylize;
        RunConfig& run = inv.run;
        run.content_path = o.content;
        run.style_path = o.style;
        run.output_path = o.output;
        run.stride = o.stride;
        run.skip_color_transfer = o.skip_color_transfer;
        run.seed = o.seed;
        run.emit_trace = o.trace || !o.trace_dir.empty();
        run.trace_dir = o.trace_dir;
        run.summary_path = o.summary;
        run.dump_tiles_dir = o.dump_tiles;
        run.fusion.patch_size = o.patch_size;
        run.fusion.blend_alpha = o.alpha;
        run.fusion.orientation_window = o.orientation_window;
        run.fusion.workers = o.workers;
        run.fusion.usm = make_usm(o.usm_weight, o.usm_sigma);
        try {
            run.fusion.overlap = parse_overlap(o.overlap);
            run.validate();
        } catch (const Error& e) {
            throw Error(ErrorCode::Usage, e.what());
        }
    } else {
        inv.command = Subcommand::Analyze;
        AnalyzeConfig& a = inv.analyze;
        a.style_path = o.a_style;
        a.out_dir = o.a_out;
        a.window = o.a_window;
        a.stride = o.a_stride;
        a.angle_map = o.a_angle_map;
        a.workers = o.a_workers;
        a.usm = make_usm(o.a_usm_weight, o.a_usm_sigma);
        if (a.window < 1 || a.stride < 1) {
            throw Error(ErrorCode::Usage, "--window and --stride must be positive");
        }
    }
    return inv;
}

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::Usage: return 1;
    case ErrorCode::FileNotFound:
    case ErrorCode::UnsupportedFormat:
    case ErrorCode::DecodeError:
    case ErrorCode::IoError: return 2;
    default: return 3;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const CliInvocation inv = parse_cli(args);
        switch (inv.command) {
        case Subcommand::Help:
            out << inv.help_text;
            return 0;
        case Subcommand::Stylize: {
            const StylizeResult result = stylize(inv.run);
            out << "wrote " << inv.run.output_path << " (" << result.output.width() << "x"
                << result.output.height() << ", " << result.tile_count << " tiles) patch "
                << summary_line(result.patch) << '\n';
            return 0;
        }
        case Subcommand::Analyze: {
            const AnalysisResult result = analyze(inv.analyze);
            out << result.summary << '\n';
            return 0;
        }
        }
    } catch (const Error& e) {
        err << "painterly: " << e.what() << '\n';
        if (e.code() == ErrorCode::Usage) err << "Run with --help for usage.\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "painterly: " << e.what() << '\n';
        return 3;
    }
    return 3;
}

} // namespace painterly
