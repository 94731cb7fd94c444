#pragma once

// Reference implementations used only by the tests. They are deliberately
// written from the textbook definitions, not from the library code paths.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "painterly/image.hpp"

namespace painterly::oracle {

using Cplx = std::complex<double>;

struct LabValue {
    double L, a, b;
};

/// sRGB -> CIE L*a*b* via the delta = 6/29 form of the CIE formulas.
LabValue srgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// Inverse of the above with clamping and round-half-up.
std::array<int, 3> lab_to_srgb(double L, double a, double b);

/// Normalized 2-D Gaussian on the truncated square support, evaluated directly.
double gaussian_2d(int dx, int dy, double sigma, int radius);

/// O(n^4) direct double-sum DFT, indexed [v*n + u].
std::vector<Cplx> naive_dft2(const Plane& plane);

/// Row-column direct DFT (O(n^3)), same convention as naive_dft2.
std::vector<Cplx> direct_dft2(const std::vector<Cplx>& data, int n, int sign);

/// Direct inverse of direct_dft2 with 1/n^2 scaling.
std::vector<Cplx> direct_idft2(const std::vector<Cplx>& data, int n);

/// Population SD of a window by collecting its pixels first.
double window_sd(const Plane& plane, int row, int col, int w, int h);

struct ArgMin {
    int row = 0;
    int col = 0;
    double sd = 0.0;
};

/// Double loop over every grid position, first strict minimum wins.
ArgMin brute_force_argmin(const Plane& plane, int window, int stride);

/// 3x3 Sobel with replicated borders: returns (gx, gy).
std::pair<double, double> sobel(const Plane& plane, int row, int col);

/// Bilinear rotation on a periodic square plane, written as inverse mapping
/// through an explicit rotation matrix.
Plane rotate_periodic(const Plane& plane, double degrees);

/// Spectrum modulus of the zero-mean plane, DC removed, scaled to unit max.
std::vector<double> unit_modulus(const Plane& plane);

/// Frequency orientation (degrees in [0,180)) holding the most power, by
/// brute-force scan of the direct DFT.
double peak_frequency_orientation(const Plane& plane);

} // namespace painterly::oracle
