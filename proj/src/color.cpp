#include "painterly/color.hpp"

#include <algorithm>
#include <cmath>

#include "painterly/parallel.hpp"

namespace painterly {

namespace {

// sRGB primaries, D65 white (IEC 61966-2-1).
constexpr double kRgbToXyz[3][3] = {
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
};

constexpr double kXyzToRgb[3][3] = {
    {3.2404542, -1.5371385, -0.4985314},
    {-0.9692660, 1.8760108, 0.0415560},
    {0.0556434, -0.2040259, 1.0572252},
};

// White point as the image of RGB (1,1,1), so neutral grays land on a = b = 0.
constexpr double kWhite[3] = {
    kRgbToXyz[0][0] + kRgbToXyz[0][1] + kRgbToXyz[0][2],
    kRgbToXyz[1][0] + kRgbToXyz[1][1] + kRgbToXyz[1][2],
    kRgbToXyz[2][0] + kRgbToXyz[2][1] + kRgbToXyz[2][2],
};

constexpr double kEpsilon = 216.0 / 24389.0;
constexpr double kKappa = 24389.0 / 27.0;

struct LinearTable {
    double value[256];
    LinearTable() {
        for (int i = 0; i < 256; ++i) {
            const double c = i / 255.0;
            value[i] = c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
        }
    }
};

const LinearTable& linear_table() {
    static const LinearTable table;
    return table;
}

double lab_f(double t) {
    return t > kEpsilon ? std::cbrt(t) : (kKappa * t + 16.0) / 116.0;
}

double lab_f_inv(double f) {
    const double cube = f * f * f;
    return cube > kEpsilon ? cube : (116.0 * f - 16.0) / kKappa;
}

std::uint8_t encode_srgb(double linear) {
    linear = std::clamp(linear, 0.0, 1.0);
    const double c = linear <= 0.0031308 ? 12.92 * linear
                                         : 1.055 * std::pow(linear, 1.0 / 2.4) - 0.055;
    const double scaled = std::floor(std::clamp(c, 0.0, 1.0) * 255.0 + 0.5);
    return static_cast<std::uint8_t>(std::clamp(scaled, 0.0, 255.0));
}

} // namespace

Lab srgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept {
    const auto& lin = linear_table().value;
    const double rgb[3] = {lin[r], lin[g], lin[b]};
    double f[3];
    for (int i = 0; i < 3; ++i) {
        const double xyz = kRgbToXyz[i][0] * rgb[0] + kRgbToXyz[i][1] * rgb[1] +
                           kRgbToXyz[i][2] * rgb[2];
        f[i] = lab_f(xyz / kWhite[i]);
    }
    return {116.0 * f[1] - 16.0, 500.0 * (f[0] - f[1]), 200.0 * (f[1] - f[2])};
}

std::array<std::uint8_t, 3> lab_to_srgb(const Lab& lab) noexcept {
    const double fy = (lab.L + 16.0) / 116.0;
    const double fx = fy + lab.a / 500.0;
    const double fz = fy - lab.b / 200.0;
    const double xyz[3] = {lab_f_inv(fx) * kWhite[0], lab_f_inv(fy) * kWhite[1],
                           lab_f_inv(fz) * kWhite[2]};
    std::array<std::uint8_t, 3> out{};
    for (int i = 0; i < 3; ++i) {
        const double linear =
            kXyzToRgb[i][0] * xyz[0] + kXyzToRgb[i][1] * xyz[1] + kXyzToRgb[i][2] * xyz[2];
        out[static_cast<std::size_t>(i)] = encode_srgb(linear);
    }
    return out;
}

LabImage rgb_to_lab(const RgbImage& img, int workers) {
    LabImage out(img.width(), img.height());
    parallel_for(img.height(), workers, [&](int row) {
        for (int col = 0; col < img.width(); ++col) {
            const std::uint8_t* p = img.pixel(row, col);
            const Lab lab = srgb_to_lab(p[0], p[1], p[2]);
            out.L(row, col) = lab.L;
            out.a(row, col) = lab.a;
            out.b(row, col) = lab.b;
        }
    });
    return out;
}

RgbImage lab_to_rgb(const LabImage& img, int workers) {
    RgbImage out(img.width(), img.height());
    parallel_for(img.height(), workers, [&](int row) {
        for (int col = 0; col < img.width(); ++col) {
            const auto rgb = lab_to_srgb({img.L(row, col), img.a(row, col), img.b(row, col)});
            std::uint8_t* p = out.pixel(row, col);
            p[0] = rgb[0];
            p[1] = rgb[1];
            p[2] = rgb[2];
        }
    });
    return out;
}

} // namespace painterly
