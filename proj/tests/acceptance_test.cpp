// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "painterly/blur.hpp"
#include "painterly/cli.hpp"
#include "painterly/color.hpp"
#include "painterly/color_transfer.hpp"
#include "painterly/edge.hpp"
#include "painterly/fft.hpp"
#include "painterly/fusion.hpp"
#include "painterly/image_io.hpp"
#include "painterly/pipeline.hpp"
#include "painterly/stroke.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

using namespace painterly;
namespace fs = std::filesystem;

namespace {

const std::string kData = PAINTERLY_DATA_DIR;

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double mean(const Plane& p) {
    const auto v = p.values();
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double angular_distance(double a, double b) {
    const double d = std::fmod(std::abs(a - b), 180.0);
    return std::min(d, 180.0 - d);
}

// Mean and population SD computed directly, without the library's channel_stats.
std::pair<double, double> moments(const Plane& p) {
    const double m = mean(p);
    double ss = 0.0;
    for (double v : p.values()) ss += (v - m) * (v - m);
    return {m, std::sqrt(ss / static_cast<double>(p.size()))};
}

Check color_statistics() {
    Check check;
    const auto start = Clock::now();
    double worst_mean = 0.0, worst_sd = 0.0;
    for (std::uint32_t pair = 0; pair < 20; ++pair) {
        const LabImage content = synth::random_lab(64, 64, 2 * pair);
        const LabImage style = synth::random_lab(64, 64, 2 * pair + 1);
        const auto result = transfer_color(content, channel_stats(style), channel_stats(content));
        const Plane* out[3] = {&result.image.L, &result.image.a, &result.image.b};
        const Plane* ref[3] = {&style.L, &style.a, &style.b};
        for (int c = 0; c < 3; ++c) {
            if (result.trace.degenerate[static_cast<std::size_t>(c)]) continue;
            const auto [m, sd] = moments(*out[c]);
            const auto [ms, sds] = moments(*ref[c]);
            worst_mean = std::max(worst_mean, std::abs(m - ms));
            worst_sd = std::max(worst_sd, std::abs(sd - sds) / sds);
        }
    }
    const double t = seconds_since(start);
    check.require(worst_mean <= 1e-6, "mean error " + fmt(worst_mean));
    check.require(worst_sd <= 1e-6, "relative sd error " + fmt(worst_sd));
    check.require(t < 1.0, "took " + fmt(t) + " s");
    check.detail = check.ok ? "20 pairs, max |dmean| " + fmt(worst_mean) + ", max rel dsd " +
                                  fmt(worst_sd) + ", " + fmt(t) + " s"
                            : check.detail;
    return check;
}

Check lab_roundtrip() {
    Check check;
    const auto start = Clock::now();
    RgbImage lattice(32 * 32, 32);
    auto level = [](int i) { return static_cast<std::uint8_t>(std::lround(i * 255.0 / 31.0)); };
    for (int r = 0; r < 32; ++r) {
        for (int g = 0; g < 32; ++g) {
            for (int b = 0; b < 32; ++b) {
                auto* px = lattice.pixel(r, g * 32 + b);
                px[0] = level(r);
                px[1] = level(g);
                px[2] = level(b);
            }
        }
    }
    const RgbImage back = lab_to_rgb(rgb_to_lab(lattice));
    int worst = 0;
    for (std::size_t i = 0; i < lattice.data().size(); ++i) {
        worst = std::max(worst, std::abs(int(back.data()[i]) - int(lattice.data()[i])));
    }
    const double t = seconds_since(start);
    check.require(worst <= 1, "max error " + std::to_string(worst) + " levels");
    check.require(t < 5.0, "took " + fmt(t) + " s");
    if (check.ok) check.detail = "32768 samples, max error " + std::to_string(worst) + " level(s), " + fmt(t) + " s";
    return check;
}

Check usm_contract() {
    Check check;
    const UsmParams params;
    const Plane flat(48, 40, 63.25);
    double flat_err = 0.0;
    for (double v : usm_sharpen(flat, params).values()) flat_err = std::max(flat_err, std::abs(v - 63.25));
    check.require(flat_err <= 1e-9, "constant plane moved by " + fmt(flat_err));

    double worst = 0.0;
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
        const Plane p = synth::uniform_noise(64 + 8 * static_cast<int>(seed), 64, seed);
        const double m0 = mean(p);
        worst = std::max(worst, std::abs(mean(usm_sharpen(p, params)) - m0) / m0);
    }
    check.require(worst <= 1e-6, "relative mean drift " + fmt(worst));
    check.require(params.weight() == 0.6, "default weight " + fmt(params.weight()));

    std::ostringstream out, err;
    run_cli({"stylize", "--help"}, out, err);
    std::istringstream help(out.str());
    bool documented = false;
    for (std::string line; std::getline(help, line);) {
        if (line.find("--usm-weight") != std::string::npos && line.find("0.6") != std::string::npos) {
            documented = true;
        }
    }
    check.require(documented, "--help does not show the 0.6 default");
    if (check.ok) check.detail = "identity err " + fmt(flat_err) + ", mean drift " + fmt(worst) + ", --help shows 0.6";
    return check;
}

Check patch_selection() {
    Check check;
    const auto start = Clock::now();
    double worst_sd = 0.0;
    for (std::uint32_t seed = 0; seed < 5; ++seed) {
        const Plane painting = synth::blocky_painting(512, 512, 100 + seed);
        const WindowScan scan = scan_windows(painting, 64, 64);
        check.require(scan.entries.size() == 64, "expected 64 windows");
        for (const auto& e : scan.entries) {
            worst_sd = std::max(worst_sd, std::abs(e.sd - oracle::window_sd(painting, e.row, e.col, 64, 64)));
        }
        const oracle::ArgMin want = oracle::brute_force_argmin(painting, 64, 64);
        const LabImage lab(painting, Plane(512, 512), Plane(512, 512));
        const BrushPatch got = select_brush_patch(lab, 64, 64);
        check.require(got.row == want.row && got.col == want.col,
                      "argmin differs on seed " + std::to_string(seed));
        check.require(std::abs(got.sd - want.sd) <= 1e-9, "selected sd differs");
        check.require(got.L == painting.crop(want.row, want.col, 64, 64), "patch pixels differ");
    }
    const double t = seconds_since(start);
    check.require(worst_sd <= 1e-9, "window sd error " + fmt(worst_sd));
    check.require(t < 10.0, "took " + fmt(t) + " s");
    if (check.ok) check.detail = "5 paintings, argmin identical, max sd error " + fmt(worst_sd) + ", " + fmt(t) + " s";
    return check;
}

Check angle_recovery() {
    Check check;
    const auto start = Clock::now();
    double worst = 0.0;
    for (int deg = 0; deg < 180; deg += 15) {
        const auto got = dominant_angle(angular_power_profile(synth::grating(128, deg, 6.0)));
        if (!got) {
            check.require(false, "grating " + std::to_string(deg) + " returned Absent");
            continue;
        }
        worst = std::max(worst, angular_distance(*got, deg));
    }
    check.require(worst <= 3.0, "angle error " + fmt(worst) + " deg");
    check.require(!dominant_angle(angular_power_profile(Plane(128, 128, 50.0))),
                  "constant patch has an angle");
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
        check.require(!dominant_angle(angular_power_profile(synth::uniform_noise(128, 128, 500 + seed))),
                      "noise seed " + std::to_string(500 + seed) + " has an angle");
    }
    const double t = seconds_since(start);
    check.require(t < 5.0, "took " + fmt(t) + " s");
    if (check.ok) check.detail = "12 gratings, max error " + fmt(worst) + " deg, constant and 10 noise seeds Absent, " + fmt(t) + " s";
    return check;
}

Check fft_correctness(const LabImage& photo) {
    Check check;
    double dft_err = 0.0;
    for (std::uint32_t seed = 0; seed < 5; ++seed) {
        const Plane p = synth::uniform_noise(8, 8, seed);
        const auto want = oracle::naive_dft2(p);
        const Spectrum got = fft2(p);
        for (std::size_t i = 0; i < want.size(); ++i) dft_err = std::max(dft_err, std::abs(got.data[i] - want[i]));
    }
    check.require(dft_err <= 1e-6, "dft error " + fmt(dft_err));

    const Plane p = synth::uniform_noise(64, 64, 7);
    const Plane back = ifft2_real(fft2(p));
    double round_err = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) round_err = std::max(round_err, std::abs(back.values()[i] - p.values()[i]));
    check.require(round_err <= 1e-9, "roundtrip error " + fmt(round_err));

    const Plane& L = photo.L;
    BrushPatch patch;
    patch.size = 64;
    patch.L = synth::grating(64, 35.0, 7.0);
    patch.dominant_angle = dominant_angle(angular_power_profile(patch.L));
    const OrientationField field = smooth_orientations(gradient_field(L), 9);
    double parseval = 0.0;
    int tiles = 0;
    auto energy = [](const Spectrum& s) {
        double e = 0.0;
        for (const auto& c : s.data) e += std::norm(c);
        return e / (static_cast<double>(s.size) * s.size);
    };
    auto spatial = [](const Plane& q) {
        double e = 0.0;
        for (double v : q.values()) e += v * v;
        return e;
    };
    fuse_L(L, field, patch, FusionConfig{}, [&](const TileRecord& tile) {
        const double in = spatial(*tile.input);
        const double out = spatial(*tile.output);
        parseval = std::max(parseval, std::abs(energy(*tile.input_spectrum) - in) / in);
        parseval = std::max(parseval, std::abs(energy(*tile.fused_spectrum) - out) / out);
        ++tiles;
    });
    check.require(parseval <= 1e-6, "Parseval deviation " + fmt(parseval));
    if (check.ok) {
        check.detail = "dft err " + fmt(dft_err) + ", roundtrip " + fmt(round_err) + ", Parseval " +
                       fmt(parseval) + " over " + std::to_string(tiles) + " tiles";
    }
    return check;
}

std::string file_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Check fusion_identity(const std::vector<RgbImage>& photos, const RgbImage& painting) {
    Check check;
    const LabImage style = rgb_to_lab(painting);
    const BrushPatch patch = select_brush_patch(style, 64, 64);
    double identity = 0.0, drift = 0.0;
    for (const RgbImage& photo : photos) {
        const LabImage lab = rgb_to_lab(photo);
        const OrientationField field = smooth_orientations(gradient_field(lab.L), 9);
        FusionConfig cfg;
        cfg.blend_alpha = 0.0;
        const Plane same = fuse_L(lab.L, field, patch, cfg);
        for (std::size_t i = 0; i < same.size(); ++i) {
            identity = std::max(identity, std::abs(same.values()[i] - lab.L.values()[i]));
        }
        cfg.blend_alpha = 0.5;
        const Plane fused = fuse_L(lab.L, field, patch, cfg);
        drift = std::max(drift, std::abs(mean(fused) - mean(lab.L)) / mean(lab.L));
        const LabImage merged = recombine(fused, lab);
        check.require(merged.a == lab.a && merged.b == lab.b, "chroma changed in recombine");
    }
    check.require(identity <= 1e-6, "alpha 0 error " + fmt(identity));
    check.require(drift <= 0.005, "mean L* drift " + fmt(drift));

    const fs::path dir = fs::temp_directory_path() / "painterly_acceptance_workers";
    fs::create_directories(dir);
    std::string reference;
    for (int workers : {1, 2, 8}) {
        RunConfig run;
        run.fusion.workers = workers;
        const StylizeResult result = stylize_images(photos.front(), painting, run);
        const fs::path file = dir / ("out_" + std::to_string(workers) + ".png");
        save_image(result.output, file.string());
        const std::string bytes = file_bytes(file);
        if (workers == 1) {
            reference = bytes;
        } else {
            check.require(!bytes.empty() && bytes == reference,
                          "PNG differs with " + std::to_string(workers) + " workers");
        }
    }
    if (check.ok) {
        check.detail = "alpha 0 err " + fmt(identity) + ", mean L* drift " + fmt(drift) +
                       ", chroma bit-identical, PNG identical for 1/2/8 workers";
    }
    return check;
}

Check overlap_settings(const RgbImage& photo, const RgbImage& painting) {
    Check check;
    std::string counts;
    for (OverlapFraction overlap : {OverlapFraction::Eighth, OverlapFraction::Quarter, OverlapFraction::Half}) {
        RunConfig run;
        run.fusion.overlap = overlap;
        const StylizeResult result = stylize_images(photo, painting, run);
        const int step = run.fusion.step();
        // ceil((extent - patch) / step) + 1 along each axis
        const int along_x = static_cast<int>(std::ceil((photo.width() - 64) / double(step))) + 1;
        const int along_y = static_cast<int>(std::ceil((photo.height() - 64) / double(step))) + 1;
        check.require(result.tile_count == along_x * along_y,
                      to_string(overlap) + " produced " + std::to_string(result.tile_count) + " tiles");
        check.require(result.output.width() == photo.width() && result.output.height() == photo.height(),
                      "output size changed");
        counts += " " + to_string(overlap) + ":" + std::to_string(result.tile_count);
    }
    std::ifstream readme(std::string(PAINTERLY_SOURCE_DIR) + "/README.md");
    const std::string text{std::istreambuf_iterator<char>(readme), std::istreambuf_iterator<char>()};
    check.require(text.find("--overlap") != std::string::npos && text.find("1/4") != std::string::npos &&
                      text.find("1/8") != std::string::npos,
                  "README lacks overlap guidance");
    if (check.ok) check.detail = "512x512 tiles" + counts + ", README documents 1/4 default";
    return check;
}

Check end_to_end() {
    Check check;
    const fs::path dir = fs::temp_directory_path() / "painterly_acceptance_e2e";
    fs::remove_all(dir);
    fs::create_directories(dir);
    RunConfig run;
    run.content_path = kData + "/photo_astronaut.png";
    run.style_path = kData + "/painting_dabs.png";
    run.output_path = (dir / "out.png").string();
    run.summary_path = (dir / "summary.json").string();
    run.fusion.workers = 1;
    const auto start = Clock::now();
    const StylizeResult result = stylize(run);
    const double t = seconds_since(start);
    check.require(t < 10.0, "took " + fmt(t) + " s");
    check.require(result.output.width() == 512 && result.output.height() == 512, "unexpected size");

    std::ifstream in(run.summary_path);
    const auto summary = nlohmann::json::parse(in, nullptr, false);
    check.require(!summary.is_discarded(), "summary is not valid JSON");
    if (!summary.is_discarded()) {
        const Plane* planes[3] = {&result.matched.L, &result.matched.a, &result.matched.b};
        const char* keys[3] = {"L", "a", "b"};
        for (int c = 0; c < 3; ++c) {
            const double style_mean = summary["style_stats"]["mean"][keys[c]];
            const double style_sd = summary["style_stats"]["sd"][keys[c]];
            const double matched_mean = summary["matched_stats"]["mean"][keys[c]];
            const double matched_sd = summary["matched_stats"]["sd"][keys[c]];
            const auto [m, sd] = moments(*planes[c]);
            check.require(std::abs(matched_mean - style_mean) <= 1e-6, std::string(keys[c]) + " mean off");
            check.require(std::abs(matched_sd - style_sd) <= 1e-6 * style_sd, std::string(keys[c]) + " sd off");
            check.require(std::abs(m - style_mean) <= 1e-6, std::string(keys[c]) + " recomputed mean off");
            check.require(std::abs(sd - style_sd) <= 1e-6 * style_sd, std::string(keys[c]) + " recomputed sd off");
        }
    }
    if (check.ok) check.detail = "512x512 in " + fmt(t) + " s single-threaded, summary stats match style";
    return check;
}

} // namespace

int main() {
    const RgbImage astronaut = load_image(kData + "/photo_astronaut.png");
    const RgbImage coffee = load_image(kData + "/photo_coffee.png");
    const RgbImage swirls = load_image(kData + "/painting_swirls.png");

    const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
        {"color statistics transfer", color_statistics},
        {"Lab roundtrip lattice", lab_roundtrip},
        {"USM contract", usm_contract},
        {"patch selection oracle", patch_selection},
        {"dominant angle recovery", angle_recovery},
        {"FFT correctness", [&] { return fft_correctness(rgb_to_lab(astronaut)); }},
        {"fusion identity and conservation", [&] { return fusion_identity({astronaut, coffee}, swirls); }},
        {"overlap settings", [&] { return overlap_settings(astronaut, swirls); }},
        {"end-to-end run", end_to_end},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        try {
            check = criteria[i].second();
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %zu %s: %s\n", check.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    check.detail.c_str());
        failures += check.ok ? 0 : 1;
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
