#pragma once

#include <vector>

#include "specsal/image.hpp"
#include "specsal/kernels.hpp"
#include "specsal/rank_filter.hpp"

namespace specsal {

// Spatial saliency map, min-max normalized to [0,1]. `degenerate` marks maps
// built from constant inputs or whose raw values were constant; such maps are
// all zeros rather than an error.
struct SaliencyMap {
    int width = 0;
    int height = 0;
    std::vector<double> data;
    bool degenerate = false;

    double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    const double& at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
};

// Log-amplitude minus its local average; may be negative.
struct ResidualSpectrum {
    int width = 0;
    int height = 0;
    std::vector<double> data;
};

// Whether the residual is re-exponentiated before being used as a magnitude.
// The residual lives in log domain, so exp is the default; the raw variant is
// kept selectable.
enum class ResidualMagnitude { exp_residual, raw_residual };

// Layout of the amplitude spectrum while it is being filtered. Zero padding
// makes filtering sensitive to where the array edges fall, so both layouts
// are available; unshifted (DC at (0,0)) is the default everywhere.
enum class SpectrumLayout { unshifted, centered };

ResidualSpectrum residual_spectrum(const GrayImage& img, int box_n = 3);

// Saliency from the spectral residual: reconstruct with magnitude exp(R)
// (or R itself, see ResidualMagnitude) and the original phase.
SaliencyMap spectral_residual_map(const GrayImage& img, int box_n = 3,
                                  ResidualMagnitude mode = ResidualMagnitude::exp_residual);

// Reconstruction with unit amplitude and the original phase.
SaliencyMap phase_only_map(const GrayImage& img);

// Reconstruction with the Gaussian-smoothed amplitude and the original phase.
SaliencyMap smoothed_amplitude_map(const GrayImage& img, const GaussianFilterSpec& g,
                                   SpectrumLayout layout = SpectrumLayout::unshifted);

// Reconstruction with the percentile-filtered amplitude and the original phase.
SaliencyMap percentile_saliency_map(const GrayImage& img, const PercentileFilterSpec& spec,
                                    SpectrumLayout layout = SpectrumLayout::unshifted);

// Element-wise square, spatial Gaussian smoothing, renormalization.
SaliencyMap postprocess(const SaliencyMap& map, const GaussianFilterSpec& g);

}  // namespace specsal
