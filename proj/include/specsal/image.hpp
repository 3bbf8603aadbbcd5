#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace specsal {

// Row-major 2D buffer; x indexes columns, y indexes rows. The Tag parameter
// keeps the frequency-domain and spatial-domain types from mixing.
template <typename T, typename Tag>
struct Grid2 {
    int width = 0;
    int height = 0;
    std::vector<T> data;

    Grid2() = default;
    Grid2(int w, int h, T fill = T{}) : width(w), height(h) {
        if (w < 1 || h < 1) throw std::invalid_argument("Grid2: dimensions must be >= 1");
        data.assign(static_cast<size_t>(w) * h, fill);
    }

    T& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    const T& at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }

    bool empty() const { return data.empty(); }
    size_t count() const { return data.size(); }
    bool same_shape(int w, int h) const { return width == w && height == h; }
};

using GrayImage = Grid2<double, struct GrayImageTag>;
using ComplexSpectrum = Grid2<std::complex<double>, struct ComplexSpectrumTag>;
using AmplitudeSpectrum = Grid2<double, struct AmplitudeSpectrumTag>;
using PhaseSpectrum = Grid2<double, struct PhaseSpectrumTag>;

// Ranges narrower than this (relative to magnitude) count as constant for
// min-max normalization; stretching them would only amplify rounding noise.
inline constexpr double kDegenerateRange = 1e-12;

// Min-max rescale of `values` to [0,1] in place. Constant inputs become all
// zeros. Returns true when the input was (numerically) constant.
bool normalize_unit_range(std::vector<double>& values);

// Affine rescale of intensities to [0,1]; constant images map to all zeros.
GrayImage normalize_image(const GrayImage& img);

}  // namespace specsal
