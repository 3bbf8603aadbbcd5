#pragma once

#include "specsal/image.hpp"

namespace specsal {

// Sliding-window percentile (rank-order) filter parameters. The window is
// w x w bins centered on each position; positions outside the field evaluate
// to 0 (zero padding).
struct PercentileFilterSpec {
    double p = 10.0;  // percentile, in (0, 100]
    int w = 1;        // window side length, odd

    // w given directly.
    static PercentileFilterSpec from_window(double p, int w);

    // w = round(wf * width), forced odd by rounding down. The percentile
    // window needs a center bin, so even results step down by one.
    static PercentileFilterSpec from_fraction(double p, double wf, int width);

    double window_fraction(int width) const { return static_cast<double>(w) / width; }

    // 1-based rank selected inside each window: k = ceil(p * w^2 / 100).
    int order_rank() const;

    void validate() const;
};

// Reference implementation: materializes every window and selects the k-th
// smallest element directly.
AmplitudeSpectrum percentile_filter_naive(const AmplitudeSpectrum& amp,
                                          const PercentileFilterSpec& spec);

// Sliding-window implementation over rank-compressed values with a two-level
// count histogram. Bit-exact with the naive path; per-bin cost is O(w) plus
// a selection scan, not O(w^2).
AmplitudeSpectrum percentile_filter_fast(const AmplitudeSpectrum& amp,
                                         const PercentileFilterSpec& spec);

}  // namespace specsal
