#include "specsal/saliency.hpp"

#include <algorithm>
#include <cmath>

#include "specsal/spectral.hpp"

namespace specsal {

namespace {

bool is_constant(const GrayImage& img) {
    auto [lo, hi] = std::minmax_element(img.data.begin(), img.data.end());
    return *hi - *lo <= kDegenerateRange * std::max({1.0, std::abs(*lo), std::abs(*hi)});
}

SaliencyMap finish_map(GrayImage recon, bool degenerate_input) {
    SaliencyMap map;
    map.width = recon.width;
    map.height = recon.height;
    map.data = std::move(recon.data);
    // Saliency is the magnitude of the reconstruction: large deviations are
    // salient regardless of sign, and the raw map stays nonnegative.
    for (double& v : map.data) v = std::abs(v);
    const bool constant_map = normalize_unit_range(map.data);
    map.degenerate = degenerate_input || constant_map;
    return map;
}

// Applies `filter` to the amplitude in the requested layout and reconstructs
// with the original phase.
template <typename FilterFn>
SaliencyMap filtered_amplitude_map(const GrayImage& img, SpectrumLayout layout,
                                   FilterFn&& filter) {
    const bool degenerate_input = is_constant(img);
    auto [amp, phase] = split_amp_phase(dft2_forward(img));
    AmplitudeSpectrum filtered;
    if (layout == SpectrumLayout::centered) {
        filtered = fftshift_inverse(filter(fftshift(amp)));
    } else {
        filtered = filter(amp);
    }
    return finish_map(dft2_inverse(recombine(filtered, phase)), degenerate_input);
}

}  // namespace

ResidualSpectrum residual_spectrum(const GrayImage& img, int box_n) {
    auto [amp, phase] = split_amp_phase(dft2_forward(img));
    const AmplitudeSpectrum log_amp = log_amplitude(amp);
    const AmplitudeSpectrum local_avg = convolve2(log_amp, box_kernel(box_n));
    ResidualSpectrum res{img.width, img.height, std::vector<double>(log_amp.data.size())};
    for (size_t i = 0; i < res.data.size(); ++i) res.data[i] = log_amp.data[i] - local_avg.data[i];
    return res;
}

SaliencyMap spectral_residual_map(const GrayImage& img, int box_n, ResidualMagnitude mode) {
    const bool degenerate_input = is_constant(img);
    auto [amp, phase] = split_amp_phase(dft2_forward(img));
    const AmplitudeSpectrum log_amp = log_amplitude(amp);
    const AmplitudeSpectrum local_avg = convolve2(log_amp, box_kernel(box_n));
    AmplitudeSpectrum magnitude(img.width, img.height);
    for (size_t i = 0; i < magnitude.data.size(); ++i) {
        const double residual = log_amp.data[i] - local_avg.data[i];
        magnitude.data[i] = mode == ResidualMagnitude::exp_residual ? std::exp(residual) : residual;
    }
    return finish_map(dft2_inverse(recombine(magnitude, phase)), degenerate_input);
}

SaliencyMap phase_only_map(const GrayImage& img) {
    const bool degenerate_input = is_constant(img);
    auto [amp, phase] = split_amp_phase(dft2_forward(img));
    const AmplitudeSpectrum unit(img.width, img.height, 1.0);
    return finish_map(dft2_inverse(recombine(unit, phase)), degenerate_input);
}

SaliencyMap smoothed_amplitude_map(const GrayImage& img, const GaussianFilterSpec& g,
                                   SpectrumLayout layout) {
    const LowPassKernel kernel = gaussian_kernel(g);
    return filtered_amplitude_map(img, layout, [&](const AmplitudeSpectrum& amp) {
        return convolve2(amp, kernel);
    });
}

SaliencyMap percentile_saliency_map(const GrayImage& img, const PercentileFilterSpec& spec,
                                    SpectrumLayout layout) {
    return filtered_amplitude_map(img, layout, [&](const AmplitudeSpectrum& amp) {
        return percentile_filter_fast(amp, spec);
    });
}

SaliencyMap postprocess(const SaliencyMap& map, const GaussianFilterSpec& g) {
    std::vector<double> squared(map.data.size());
    for (size_t i = 0; i < squared.size(); ++i) squared[i] = map.data[i] * map.data[i];
    SaliencyMap out;
    out.width = map.width;
    out.height = map.height;
    out.data = convolve2_raw(squared, map.width, map.height, gaussian_kernel(g));
    const bool constant_map = normalize_unit_range(out.data);
    out.degenerate = map.degenerate || constant_map;
    return out;
}

}  // namespace specsal
