#pragma once

#include <array>
#include <cstdint>

#include "painterly/image.hpp"

namespace painterly {

/// One CIE L*a*b* sample (D65 white, 2 degree observer).
struct Lab {
    double L = 0.0;
    double a = 0.0;
    double b = 0.0;
};

Lab srgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept;

/// Inverse conversion; each sRGB channel is clamped to [0,255] and rounded half up.
std::array<std::uint8_t, 3> lab_to_srgb(const Lab& lab) noexcept;

LabImage rgb_to_lab(const RgbImage& img, int workers = 1);
RgbImage lab_to_rgb(const LabImage& img, int workers = 1);

} // namespace painterly
