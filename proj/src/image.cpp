#include "specsal/image.hpp"

#include <algorithm>
#include <cmath>

namespace specsal {

bool normalize_unit_range(std::vector<double>& values) {
    if (values.empty()) return true;
    auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it, hi = *hi_it;
    const double range = hi - lo;
    if (range <= kDegenerateRange * std::max({1.0, std::abs(lo), std::abs(hi)})) {
        std::fill(values.begin(), values.end(), 0.0);
        return true;
    }
    const double inv = 1.0 / range;
    for (double& v : values) v = (v - lo) * inv;
    return false;
}

GrayImage normalize_image(const GrayImage& img) {
    GrayImage out = img;
    normalize_unit_range(out.data);
    return out;
}

}  // namespace specsal
