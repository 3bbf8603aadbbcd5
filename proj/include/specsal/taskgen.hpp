#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "specsal/image.hpp"

namespace specsal {

inline constexpr int kImageSize = 96;

enum class TaskKind {
    sd1,
    sd5,
    sd15,
    sd16,
    sd22,
    bars,
    gaze_intensity,
    gaze_orientation,
    gaze_closure,
};

const char* to_string(TaskKind kind);
std::optional<TaskKind> task_from_string(std::string_view name);
bool is_sd_task(TaskKind kind);

// Closed polyline in pixel coordinates; the last point connects back to the
// first when rendered.
struct ShapeContour {
    std::vector<std::array<double, 2>> points;
    uint64_t id = 0;  // generation seed
};

// Tight binary raster of a contour's 1-pixel stroke. Figures are compared by
// their masks: identical figures blitted at different offsets stay
// pixel-identical up to translation.
struct ShapeMask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> on;

    bool at(int x, int y) const { return on[static_cast<size_t>(y) * width + x] != 0; }
    int stroke_count() const;
    bool operator==(const ShapeMask&) const = default;
};

// Radial-Fourier contour: radius(theta) = r0 * (1 + sum_{k=2..6} a_k cos(k theta + phi_k)),
// scaled so the figure fits in a size x size box. Throws if the radius is not
// strictly positive everywhere (the contour would self-intersect).
ShapeContour shape_from_coefficients(const std::array<double, 5>& amplitudes,
                                     const std::array<double, 5>& phases, int size,
                                     int samples = 96);

// Random coefficients a_k in [-0.25, 0.25], resampled until the radius stays
// positive. Deterministic given the seed.
ShapeContour random_closed_shape(uint64_t seed, int size);

ShapeMask rasterize_shape(const ShapeContour& contour);
ShapeMask flip_horizontal(const ShapeMask& mask);

// Fraction of stroke pixels that differ at the best translational alignment;
// 0 exactly for translated copies.
double mask_min_difference(const ShapeMask& a, const ShapeMask& b);

// Early-out variant of the above for generation-time checks.
bool masks_distinct(const ShapeMask& a, const ShapeMask& b, double threshold);

// One task sample: black 1-pixel strokes on a white background.
struct LabeledImage {
    GrayImage image;
    int label = 1;  // class, {1, 2}
    TaskKind task = TaskKind::sd1;
    uint64_t seed = 0;
};

// Same-different task generators. Classes alternate with even indices first,
// so any prefix is balanced within +-1.
std::vector<LabeledImage> gen_task1(uint64_t seed, int n);
std::vector<LabeledImage> gen_task5(uint64_t seed, int n);
std::vector<LabeledImage> gen_task15(uint64_t seed, int n);
std::vector<LabeledImage> gen_task16(uint64_t seed, int n);
std::vector<LabeledImage> gen_task22(uint64_t seed, int n);
std::vector<LabeledImage> gen_task(TaskKind task, uint64_t seed, int n);

// Vertical stripes of the given period across the full image height,
// optionally with 2-3 unique shapes superimposed.
GrayImage gen_bars(uint64_t seed, int period, bool with_unique_shapes);

struct PixelBox {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // half-open
    bool contains(int x, int y) const { return x >= x0 && x < x1 && y >= y0 && y < y1; }
};

// Psychological search pattern: a grid of identical elements with exactly one
// odd element, whose bounding box is returned as ground truth.
struct GazePattern {
    GrayImage image;
    PixelBox target_box;
};

GazePattern gen_gaze_pattern(TaskKind kind);

// Four translated copies of one shape plus one unique shape, with the stroke
// pixels of the two groups reported separately (kImageSize^2 flag buffers).
struct RepeatedUniqueSample {
    GrayImage image;
    std::vector<uint8_t> duplicated_stroke;
    std::vector<uint8_t> unique_stroke;
};

RepeatedUniqueSample gen_repeated_plus_unique(uint64_t seed);

}  // namespace specsal
