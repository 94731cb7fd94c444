#include "painterly/image.hpp"

#include <algorithm>
#include <string>

#include "painterly/error.hpp"

namespace painterly {

namespace {

void require_dims(int width, int height, const char* what) {
    if (width < 1 || height < 1) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string(what) + " dimensions must be at least 1x1, got " +
                        std::to_string(width) + "x" + std::to_string(height));
    }
}

std::size_t area(int width, int height) {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
}

} // namespace

Plane::Plane(int width, int height, double fill) : width_(width), height_(height) {
    require_dims(width, height, "plane");
    values_.assign(area(width, height), fill);
}

Plane::Plane(int width, int height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
    require_dims(width, height, "plane");
    if (values_.size() != area(width, height)) {
        throw Error(ErrorCode::DimensionMismatch, "plane data length does not match dimensions");
    }
}

double Plane::clamped(int row, int col) const {
    row = std::clamp(row, 0, height_ - 1);
    col = std::clamp(col, 0, width_ - 1);
    return values_[index(row, col)];
}

Plane Plane::crop(int row, int col, int w, int h) const {
    if (row < 0 || col < 0 || row + h > height_ || col + w > width_) {
        throw Error(ErrorCode::InvalidArgument, "crop rectangle outside plane");
    }
    Plane out(w, h);
    for (int r = 0; r < h; ++r) {
        const auto src = values_.begin() + static_cast<std::ptrdiff_t>(index(row + r, col));
        std::copy(src, src + w, out.values_.begin() + static_cast<std::ptrdiff_t>(r) * w);
    }
    return out;
}

RgbImage::RgbImage(int width, int height) : width_(width), height_(height) {
    require_dims(width, height, "image");
    data_.assign(area(width, height) * 3, 0);
}

RgbImage::RgbImage(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
    require_dims(width, height, "image");
    if (data_.size() != area(width, height) * 3) {
        throw Error(ErrorCode::DimensionMismatch, "image data length must be width*height*3");
    }
}

LabImage::LabImage(int width, int height) : L(width, height), a(width, height), b(width, height) {}

LabImage::LabImage(Plane l, Plane a_plane, Plane b_plane)
    : L(std::move(l)), a(std::move(a_plane)), b(std::move(b_plane)) {
    if (a.width() != L.width() || b.width() != L.width() || a.height() != L.height() ||
        b.height() != L.height()) {
        throw Error(ErrorCode::DimensionMismatch, "Lab planes differ in size");
    }
}

} // namespace painterly
