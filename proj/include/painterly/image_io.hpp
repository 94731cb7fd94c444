#pragma once

#include <string>

#include "painterly/image.hpp"

namespace painterly {

/// Decodes a PNG or JPEG file into 8-bit sRGB. Gray sources are expanded to
/// three equal channels, alpha is dropped and 16-bit samples are reduced to 8.
RgbImage load_image(const std::string& path);

/// Writes an 8-bit RGB PNG.
void save_image(const RgbImage& img, const std::string& path);

/// Writes a plane as an 8-bit gray PNG, mapping [lo, hi] linearly onto [0, 255].
void save_plane(const Plane& plane, const std::string& path, double lo, double hi);

} // namespace painterly
