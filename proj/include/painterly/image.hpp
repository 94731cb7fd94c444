#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace painterly {

/// Single floating-point image plane, row-major.
class Plane {
public:
    Plane() = default;
    Plane(int width, int height, double fill = 0.0);
    Plane(int width, int height, std::vector<double> values);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    double& operator()(int row, int col) { return values_[index(row, col)]; }
    double operator()(int row, int col) const { return values_[index(row, col)]; }

    /// Edge-replicated read; coordinates outside the plane clamp to the border.
    double clamped(int row, int col) const;

    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }

    /// Copy of the rectangle [row, row+h) x [col, col+w); must lie inside the plane.
    Plane crop(int row, int col, int w, int h) const;

    bool operator==(const Plane&) const = default;

private:
    std::size_t index(int row, int col) const noexcept {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(col);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<double> values_;
};

/// Interleaved 8-bit sRGB raster.
class RgbImage {
public:
    RgbImage() = default;
    RgbImage(int width, int height);
    RgbImage(int width, int height, std::vector<std::uint8_t> data);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    std::uint8_t* pixel(int row, int col) { return data_.data() + offset(row, col); }
    const std::uint8_t* pixel(int row, int col) const { return data_.data() + offset(row, col); }

    std::span<std::uint8_t> data() noexcept { return data_; }
    std::span<const std::uint8_t> data() const noexcept { return data_; }

    bool operator==(const RgbImage&) const = default;

private:
    std::size_t offset(int row, int col) const noexcept {
        return (static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
                static_cast<std::size_t>(col)) * 3;
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> data_;
};

/// CIE L*a*b* raster held as three planes. Values may leave the nominal
/// gamut during processing; they are clamped only when converted back to sRGB.
struct LabImage {
    Plane L;
    Plane a;
    Plane b;

    LabImage() = default;
    LabImage(int width, int height);
    LabImage(Plane l, Plane a_plane, Plane b_plane);

    int width() const noexcept { return L.width(); }
    int height() const noexcept { return L.height(); }

    bool operator==(const LabImage&) const = default;
};

} // namespace painterly
