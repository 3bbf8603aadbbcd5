#include "specsal/rank_filter.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace specsal {

PercentileFilterSpec PercentileFilterSpec::from_window(double p, int w) {
    PercentileFilterSpec spec{p, w};
    spec.validate();
    return spec;
}

PercentileFilterSpec PercentileFilterSpec::from_fraction(double p, double wf, int width) {
    if (!(wf > 0.0)) throw std::invalid_argument("PercentileFilterSpec: wf must be > 0");
    int w = static_cast<int>(std::lround(wf * width));
    if (w % 2 == 0) --w;
    if (w < 1) w = 1;
    return from_window(p, w);
}

int PercentileFilterSpec::order_rank() const {
    return static_cast<int>(std::ceil(p * w * w / 100.0));
}

void PercentileFilterSpec::validate() const {
    if (!(p > 0.0)) throw std::invalid_argument("PercentileFilterSpec: p must be > 0");
    if (p > 100.0) throw std::invalid_argument("PercentileFilterSpec: p must be <= 100");
    if (w < 1 || w % 2 == 0)
        throw std::invalid_argument("PercentileFilterSpec: w must be odd and positive");
}

namespace {

void check_window_fits(const AmplitudeSpectrum& amp, const PercentileFilterSpec& spec) {
    spec.validate();
    if (amp.empty()) throw std::invalid_argument("percentile_filter: empty input");
    if (spec.w > 2 * std::max(amp.width, amp.height) - 1)
        throw std::invalid_argument("percentile_filter: window larger than 2x the spectrum");
}

}  // namespace

AmplitudeSpectrum percentile_filter_naive(const AmplitudeSpectrum& amp,
                                          const PercentileFilterSpec& spec) {
    check_window_fits(amp, spec);
    const int W = amp.width, H = amp.height;
    const int w = spec.w, r = w / 2;
    const int k = spec.order_rank();

    AmplitudeSpectrum out(W, H);
    std::vector<double> window;
    window.reserve(static_cast<size_t>(w) * w);
    for (int y = 0; y < H; ++y) {
        for (int x = 0; x < W; ++x) {
            window.clear();
            for (int dy = -r; dy <= r; ++dy) {
                const int yy = y + dy;
                if (yy < 0 || yy >= H) continue;
                const int x0 = std::max(0, x - r), x1 = std::min(W - 1, x + r);
                const double* row = amp.data.data() + static_cast<size_t>(yy) * W;
                for (int xx = x0; xx <= x1; ++xx) window.push_back(row[xx]);
            }
            // Window positions outside the spectrum evaluate to 0.
            window.resize(static_cast<size_t>(w) * w, 0.0);
            std::nth_element(window.begin(), window.begin() + (k - 1), window.end());
            out.at(x, y) = window[k - 1];
        }
    }
    return out;
}

AmplitudeSpectrum percentile_filter_fast(const AmplitudeSpectrum& amp,
                                         const PercentileFilterSpec& spec) {
    check_window_fits(amp, spec);
    const int W = amp.width, H = amp.height;
    const int w = spec.w, r = w / 2;
    const uint32_t k = static_cast<uint32_t>(spec.order_rank());
    const uint32_t window_area = static_cast<uint32_t>(w) * static_cast<uint32_t>(w);

    // Rank compression: order statistics over values equal order statistics
    // over ranks because the rank -> value map is strictly increasing. 0.0 is
    // always present so padded positions have a rank.
    std::vector<double> values(amp.data);
    values.push_back(0.0);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const uint32_t nv = static_cast<uint32_t>(values.size());

    std::vector<uint32_t> rank(amp.data.size());
    for (size_t i = 0; i < amp.data.size(); ++i)
        rank[i] = static_cast<uint32_t>(
            std::lower_bound(values.begin(), values.end(), amp.data[i]) - values.begin());
    const uint32_t zero_rank = static_cast<uint32_t>(
        std::lower_bound(values.begin(), values.end(), 0.0) - values.begin());

    // Two-level counts: fine bin per rank, coarse bin per 2^shift ranks.
    const int shift = std::max(4, (static_cast<int>(std::bit_width(nv)) + 1) / 2);
    const uint32_t ncoarse = (nv >> shift) + 1;
    std::vector<uint32_t> fine(nv, 0), coarse(ncoarse, 0);
    const uint32_t zero_coarse = zero_rank >> shift;

    auto add_column = [&](int cx, int y0, int y1) {
        for (int yy = y0; yy <= y1; ++yy) {
            const uint32_t rk = rank[static_cast<size_t>(yy) * W + cx];
            ++fine[rk];
            ++coarse[rk >> shift];
        }
    };
    auto remove_column = [&](int cx, int y0, int y1) {
        for (int yy = y0; yy <= y1; ++yy) {
            const uint32_t rk = rank[static_cast<size_t>(yy) * W + cx];
            --fine[rk];
            --coarse[rk >> shift];
        }
    };
    // Smallest rank whose cumulative count (including `zeros` virtual entries
    // at zero_rank) reaches k.
    auto select = [&](uint32_t zeros) -> uint32_t {
        uint32_t acc = 0;
        for (uint32_t c = 0;; ++c) {
            const uint32_t block = coarse[c] + (c == zero_coarse ? zeros : 0);
            if (acc + block >= k) {
                for (uint32_t f = c << shift;; ++f) {
                    acc += fine[f] + (f == zero_rank ? zeros : 0);
                    if (acc >= k) return f;
                }
            }
            acc += block;
        }
    };

    AmplitudeSpectrum out(W, H);
    for (int y = 0; y < H; ++y) {
        std::fill(fine.begin(), fine.end(), 0);
        std::fill(coarse.begin(), coarse.end(), 0);
        const int y0 = std::max(0, y - r), y1 = std::min(H - 1, y + r);
        const uint32_t rows_in = static_cast<uint32_t>(y1 - y0 + 1);
        for (int cx = 0; cx <= std::min(r, W - 1); ++cx) add_column(cx, y0, y1);

        for (int x = 0; x < W; ++x) {
            if (x > 0) {
                if (x + r < W) add_column(x + r, y0, y1);
                if (x - r - 1 >= 0) remove_column(x - r - 1, y0, y1);
            }
            const uint32_t cols_in =
                static_cast<uint32_t>(std::min(W - 1, x + r) - std::max(0, x - r) + 1);
            const uint32_t zeros = window_area - rows_in * cols_in;
            out.at(x, y) = values[select(zeros)];
        }
    }
    return out;
}

}  // namespace specsal
