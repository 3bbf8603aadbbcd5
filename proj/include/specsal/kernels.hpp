#pragma once

#include <vector>

#include "specsal/image.hpp"

namespace specsal {

// Isotropic Gaussian low-pass filter. The kernel is truncated at 3*sigma and
// renormalized to unit sum.
struct GaussianFilterSpec {
    double sigma = 1.0;

    int radius() const;  // ceil(3*sigma)
    void validate() const;
};

// Discrete low-pass kernel; n odd, nonnegative weights summing to 1.
struct LowPassKernel {
    int n = 0;
    std::vector<double> weights;  // row-major n*n

    double at(int dx, int dy) const {  // dx, dy in [-n/2, n/2]
        const int r = n / 2;
        return weights[static_cast<size_t>(dy + r) * n + (dx + r)];
    }
};

// 2D Gaussian density at offset (x, y): exp(-(x^2+y^2)/(2 sigma^2)) / (2 pi sigma^2).
double gaussian_point(double x, double y, double sigma);

LowPassKernel gaussian_kernel(const GaussianFilterSpec& spec);

// Uniform n x n kernel with weights 1/n^2.
LowPassKernel box_kernel(int n);

// 2D correlation with zero padding outside the field (same border rule as the
// percentile filter). Symmetric kernels make this equal to convolution.
AmplitudeSpectrum convolve2(const AmplitudeSpectrum& field, const LowPassKernel& kernel);

// Shared implementation on a raw buffer; used for spatial-domain smoothing too.
std::vector<double> convolve2_raw(const std::vector<double>& src, int width, int height,
                                  const LowPassKernel& kernel);

}  // namespace specsal
