#include "specsal/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace specsal {

int GaussianFilterSpec::radius() const { return static_cast<int>(std::ceil(3.0 * sigma)); }

void GaussianFilterSpec::validate() const {
    if (!(sigma > 0.0)) throw std::invalid_argument("GaussianFilterSpec: sigma must be > 0");
}

double gaussian_point(double x, double y, double sigma) {
    const double s2 = sigma * sigma;
    return std::exp(-(x * x + y * y) / (2.0 * s2)) / (2.0 * M_PI * s2);
}

LowPassKernel gaussian_kernel(const GaussianFilterSpec& spec) {
    spec.validate();
    const int r = spec.radius();
    const int n = 2 * r + 1;
    LowPassKernel kernel{n, std::vector<double>(static_cast<size_t>(n) * n)};
    double sum = 0.0;
    for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx) {
            const double v = gaussian_point(dx, dy, spec.sigma);
            kernel.weights[static_cast<size_t>(dy + r) * n + (dx + r)] = v;
            sum += v;
        }
    for (double& w : kernel.weights) w /= sum;
    return kernel;
}

LowPassKernel box_kernel(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("box_kernel: n must be odd and positive");
    return LowPassKernel{n, std::vector<double>(static_cast<size_t>(n) * n, 1.0 / (n * n))};
}

std::vector<double> convolve2_raw(const std::vector<double>& src, int width, int height,
                                  const LowPassKernel& kernel) {
    const int n = kernel.n;
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("convolve2: kernel side must be odd");
    if (n >= 2 * width || n >= 2 * height)
        throw std::invalid_argument("convolve2: kernel must be smaller than 2x the field");
    const int r = n / 2;
    std::vector<double> out(src.size());
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            double acc = 0.0;
            const int dy0 = std::max(-r, -y), dy1 = std::min(r, height - 1 - y);
            const int dx0 = std::max(-r, -x), dx1 = std::min(r, width - 1 - x);
            for (int dy = dy0; dy <= dy1; ++dy) {
                const double* row = src.data() + static_cast<size_t>(y + dy) * width + x;
                const double* krow = kernel.weights.data() + static_cast<size_t>(dy + r) * n + r;
                for (int dx = dx0; dx <= dx1; ++dx) acc += row[dx] * krow[dx];
            }
            out[static_cast<size_t>(y) * width + x] = acc;
        }
    }
    return out;
}

AmplitudeSpectrum convolve2(const AmplitudeSpectrum& field, const LowPassKernel& kernel) {
    AmplitudeSpectrum out(field.width, field.height);
    out.data = convolve2_raw(field.data, field.width, field.height, kernel);
    return out;
}

}  // namespace specsal
