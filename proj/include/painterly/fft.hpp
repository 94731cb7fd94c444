#pragma once

#include <complex>
#include <vector>

#include "painterly/image.hpp"

namespace painterly {

using Complex = std::complex<double>;

/// Square 2-D spectrum, indexed [v][u] with v the row frequency.
struct Spectrum {
    int size = 0;
    std::vector<Complex> data;

    Spectrum() = default;
    explicit Spectrum(int n) : size(n), data(static_cast<std::size_t>(n) * n) {}

    Complex& operator()(int v, int u) { return data[static_cast<std::size_t>(v) * size + u]; }
    const Complex& operator()(int v, int u) const {
        return data[static_cast<std::size_t>(v) * size + u];
    }
};

/// Maps a DFT index into the centered range [-n/2, n/2).
inline int centered_frequency(int k, int n) noexcept { return k <= (n - 1) / 2 ? k : k - n; }

/// Unnormalized forward DFT of a square plane. Throws Error(NotSquare).
Spectrum fft2(const Plane& plane);

/// Inverse DFT scaled by 1/n^2, so ifft2(fft2(x)) == x.
std::vector<Complex> ifft2(const Spectrum& spectrum);

/// Real part of ifft2 as a plane.
Plane ifft2_real(const Spectrum& spectrum);

} // namespace painterly
