#pragma once

// Brute-force reference implementations used only by tests. They are written
// directly from the definitions and stay independent of the library's
// computation paths.

#include <complex>
#include <vector>

#include "specsal/image.hpp"
#include "specsal/kernels.hpp"
#include "specsal/taskgen.hpp"

namespace oracle {

// O(N^4) double-loop DFT, unnormalized, DC at (0,0).
specsal::ComplexSpectrum dft2_brute(const specsal::GrayImage& img);

// O(N^4) inverse with 1/(M*N) normalization; returns the real part.
specsal::GrayImage idft2_brute(const specsal::ComplexSpectrum& spec);

// Materializes every w x w window (zero padding outside), sorts it, and
// indexes the k-th smallest with k = ceil(p*w^2/100).
specsal::AmplitudeSpectrum percentile_brute(const specsal::AmplitudeSpectrum& amp, double p,
                                            int w);

// Separable sliding-window maximum (equals the p=100 percentile filter for
// windows that stay inside the field; zero padding never lowers a max of
// nonnegative data).
specsal::AmplitudeSpectrum max_filter_brute(const specsal::AmplitudeSpectrum& amp, int w);

// Direct double-loop correlation with zero padding.
std::vector<double> convolve_brute(const std::vector<double>& src, int width, int height,
                                   const specsal::LowPassKernel& kernel);

// Exhaustive-sort k-nearest-neighbor vote with index tie-breaking.
int knn_brute(const std::vector<std::vector<double>>& train, const std::vector<int>& labels,
              const std::vector<double>& query, int k);

// Stroke pixels (intensity < 0.5) grouped into 8-connected components, each
// cropped to a tight mask.
std::vector<specsal::ShapeMask> stroke_components(const specsal::GrayImage& img);

// Fraction of differing stroke pixels at the best translational alignment,
// recomputed here independently of the library.
double best_alignment_difference(const specsal::ShapeMask& a, const specsal::ShapeMask& b);

// True if any two non-adjacent segments of the closed polyline intersect.
bool contour_self_intersects(const specsal::ShapeContour& contour);

}  // namespace oracle
