#include "specsal/taskgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "specsal/rng.hpp"

namespace specsal {

namespace {

constexpr int kMinFigure = 12;
constexpr int kMaxFigure = 32;
constexpr int kBorderMargin = 2;
constexpr int kSeparation = 2;
constexpr double kDistinctThreshold = 0.05;
constexpr int kContourSamples = 96;

}  // namespace

const char* to_string(TaskKind kind) {
    switch (kind) {
        case TaskKind::sd1: return "sd1";
        case TaskKind::sd5: return "sd5";
        case TaskKind::sd15: return "sd15";
        case TaskKind::sd16: return "sd16";
        case TaskKind::sd22: return "sd22";
        case TaskKind::bars: return "bars";
        case TaskKind::gaze_intensity: return "gaze_intensity";
        case TaskKind::gaze_orientation: return "gaze_orientation";
        case TaskKind::gaze_closure: return "gaze_closure";
    }
    return "unknown";
}

std::optional<TaskKind> task_from_string(std::string_view name) {
    for (TaskKind kind : {TaskKind::sd1, TaskKind::sd5, TaskKind::sd15, TaskKind::sd16,
                          TaskKind::sd22, TaskKind::bars, TaskKind::gaze_intensity,
                          TaskKind::gaze_orientation, TaskKind::gaze_closure}) {
        if (name == to_string(kind)) return kind;
    }
    return std::nullopt;
}

bool is_sd_task(TaskKind kind) {
    switch (kind) {
        case TaskKind::sd1:
        case TaskKind::sd5:
        case TaskKind::sd15:
        case TaskKind::sd16:
        case TaskKind::sd22: return true;
        default: return false;
    }
}

int ShapeMask::stroke_count() const {
    int c = 0;
    for (uint8_t v : on) c += v != 0;
    return c;
}

ShapeContour shape_from_coefficients(const std::array<double, 5>& amplitudes,
                                     const std::array<double, 5>& phases, int size,
                                     int samples) {
    if (size < 8 || size > 64) throw std::invalid_argument("shape size out of [8, 64]");
    if (samples < 64) throw std::invalid_argument("shape needs >= 64 contour samples");

    std::vector<double> radius(samples);
    double rmin = std::numeric_limits<double>::max(), rmax = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double theta = 2.0 * M_PI * j / samples;
        double r = 1.0;
        for (int k = 2; k <= 6; ++k) r += amplitudes[k - 2] * std::cos(k * theta + phases[k - 2]);
        radius[j] = r;
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    // A strictly positive radius keeps the polygon star-shaped, hence simple.
    if (rmin <= 0.08) throw std::invalid_argument("shape radius collapses; contour would self-intersect");

    const double scale = (size / 2.0 - 1.0) / rmax;
    const double c = size / 2.0;
    ShapeContour contour;
    contour.points.resize(samples);
    for (int j = 0; j < samples; ++j) {
        const double theta = 2.0 * M_PI * j / samples;
        contour.points[j] = {c + scale * radius[j] * std::cos(theta),
                             c + scale * radius[j] * std::sin(theta)};
    }
    return contour;
}

ShapeContour random_closed_shape(uint64_t seed, int size) {
    if (size < 8 || size > 64) throw std::invalid_argument("shape size out of [8, 64]");
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::array<double, 5> amps, phases;
        for (int k = 0; k < 5; ++k) {
            amps[k] = rng.uniform(-0.25, 0.25);
            phases[k] = rng.uniform(0.0, 2.0 * M_PI);
        }
        try {
            ShapeContour contour = shape_from_coefficients(amps, phases, size, kContourSamples);
            contour.id = seed;
            return contour;
        } catch (const std::invalid_argument&) {
            // radius collapsed; resample coefficients
        }
    }
    throw std::runtime_error("random_closed_shape: rejection budget exhausted");
}

namespace {

void draw_line(std::vector<uint8_t>& grid, int width, int x0, int y0, int x1, int y1) {
    const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
    const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    while (true) {
        grid[static_cast<size_t>(y0) * width + x0] = 1;
        if (x0 == x1 && y0 == y1) break;
        const int e2 = 2 * err;
        if (e2 >= dy) { err += dy; x0 += sx; }
        if (e2 <= dx) { err += dx; y0 += sy; }
    }
}

}  // namespace

ShapeMask rasterize_shape(const ShapeContour& contour) {
    if (contour.points.empty()) throw std::invalid_argument("rasterize_shape: empty contour");
    double max_coord = 0.0;
    for (const auto& p : contour.points) max_coord = std::max({max_coord, p[0], p[1]});
    const int canvas = static_cast<int>(std::lround(max_coord)) + 2;

    std::vector<uint8_t> grid(static_cast<size_t>(canvas) * canvas, 0);
    const size_t n = contour.points.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& a = contour.points[i];
        const auto& b = contour.points[(i + 1) % n];
        draw_line(grid, canvas, static_cast<int>(std::lround(a[0])),
                  static_cast<int>(std::lround(a[1])), static_cast<int>(std::lround(b[0])),
                  static_cast<int>(std::lround(b[1])));
    }

    int x0 = canvas, y0 = canvas, x1 = -1, y1 = -1;
    for (int y = 0; y < canvas; ++y)
        for (int x = 0; x < canvas; ++x)
            if (grid[static_cast<size_t>(y) * canvas + x]) {
                x0 = std::min(x0, x);
                y0 = std::min(y0, y);
                x1 = std::max(x1, x);
                y1 = std::max(y1, y);
            }
    ShapeMask mask{x1 - x0 + 1, y1 - y0 + 1, {}};
    mask.on.assign(static_cast<size_t>(mask.width) * mask.height, 0);
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x)
            mask.on[static_cast<size_t>(y - y0) * mask.width + (x - x0)] =
                grid[static_cast<size_t>(y) * canvas + x];
    return mask;
}

ShapeMask flip_horizontal(const ShapeMask& mask) {
    ShapeMask out{mask.width, mask.height,
                  std::vector<uint8_t>(static_cast<size_t>(mask.width) * mask.height)};
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x)
            out.on[static_cast<size_t>(y) * mask.width + (mask.width - 1 - x)] =
                mask.on[static_cast<size_t>(y) * mask.width + x];
    return out;
}

double mask_min_difference(const ShapeMask& a, const ShapeMask& b) {
    const int ca = a.stroke_count(), cb = b.stroke_count();
    const int denom = std::max(ca, cb);
    if (denom == 0) return 0.0;
    int best = std::numeric_limits<int>::max();
    for (int dy = -(b.height - 1); dy <= a.height - 1; ++dy) {
        const int y0 = std::max(0, dy), y1 = std::min(a.height, b.height + dy);
        for (int dx = -(b.width - 1); dx <= a.width - 1; ++dx) {
            const int x0 = std::max(0, dx), x1 = std::min(a.width, b.width + dx);
            int match = 0;
            for (int y = y0; y < y1; ++y) {
                const uint8_t* ra = a.on.data() + static_cast<size_t>(y) * a.width;
                const uint8_t* rb = b.on.data() + static_cast<size_t>(y - dy) * b.width - dx;
                for (int x = x0; x < x1; ++x) match += ra[x] & rb[x];
            }
            best = std::min(best, ca + cb - 2 * match);
            if (best == 0) return 0.0;
        }
    }
    return static_cast<double>(best) / denom;
}

bool masks_distinct(const ShapeMask& a, const ShapeMask& b, double threshold) {
    const int ca = a.stroke_count(), cb = b.stroke_count();
    const int denom = std::max(ca, cb);
    if (denom == 0) return false;
    // The count mismatch lower-bounds the symmetric difference at any shift.
    if (std::abs(ca - cb) >= threshold * denom) return true;
    return mask_min_difference(a, b) >= threshold;
}

namespace {

struct Placed {
    const ShapeMask* mask;
    int x, y;
};

bool boxes_conflict(int ax, int ay, int aw, int ah, int bx, int by, int bw, int bh) {
    return ax < bx + bw + kSeparation && bx < ax + aw + kSeparation &&
           ay < by + bh + kSeparation && by < ay + ah + kSeparation;
}

// Rejection-samples top-left positions inside [margin, bound - margin) so
// that bounding boxes keep >= kSeparation pixels between figures.
std::optional<std::vector<std::pair<int, int>>> place_masks(
    Rng& rng, const std::vector<const ShapeMask*>& masks, int bound_w, int bound_h,
    int attempts = 1000) {
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<std::pair<int, int>> pos;
        bool ok = true;
        for (size_t i = 0; i < masks.size() && ok; ++i) {
            const ShapeMask& m = *masks[i];
            if (m.width > bound_w - 2 * kBorderMargin || m.height > bound_h - 2 * kBorderMargin) {
                ok = false;
                break;
            }
            bool placed = false;
            for (int t = 0; t < 50 && !placed; ++t) {
                const int x = rng.uniform_int(kBorderMargin, bound_w - kBorderMargin - m.width);
                const int y = rng.uniform_int(kBorderMargin, bound_h - kBorderMargin - m.height);
                bool conflict = false;
                for (size_t j = 0; j < pos.size() && !conflict; ++j)
                    conflict = boxes_conflict(x, y, m.width, m.height, pos[j].first, pos[j].second,
                                              masks[j]->width, masks[j]->height);
                if (!conflict) {
                    pos.emplace_back(x, y);
                    placed = true;
                }
            }
            ok = placed;
        }
        if (ok) return pos;
    }
    return std::nullopt;
}

void blit(GrayImage& img, const ShapeMask& mask, int px, int py) {
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x)
            if (mask.at(x, y)) img.at(px + x, py + y) = 0.0;
}

GrayImage render(const std::vector<Placed>& figures) {
    GrayImage img(kImageSize, kImageSize, 1.0);
    for (const Placed& f : figures) blit(img, *f.mask, f.x, f.y);
    return img;
}

ShapeMask draw_mask(Rng& rng, int size) {
    return rasterize_shape(random_closed_shape(rng.bits(), size));
}

// Draws a shape whose mask differs from every existing mask by at least the
// distinctness threshold.
ShapeMask draw_distinct_mask(Rng& rng, int size, const std::vector<const ShapeMask*>& existing) {
    for (int t = 0; t < 200; ++t) {
        ShapeMask m = draw_mask(rng, size);
        bool ok = true;
        for (const ShapeMask* e : existing)
            if (!masks_distinct(m, *e, kDistinctThreshold)) {
                ok = false;
                break;
            }
        if (ok) return m;
    }
    throw std::runtime_error("draw_distinct_mask: could not draw a distinct shape");
}

// Draws `count` pairwise-distinct shapes.
std::vector<ShapeMask> draw_distinct_set(Rng& rng, int count) {
    std::vector<ShapeMask> store;
    store.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::vector<const ShapeMask*> existing;
        for (const ShapeMask& m : store) existing.push_back(&m);
        store.push_back(draw_distinct_mask(rng, rng.uniform_int(kMinFigure, kMaxFigure), existing));
    }
    return store;
}

// Figures with translated duplicates per the task's class rule; placement is
// unconstrained beyond separation. Covers sd1, sd5 and sd15.
std::optional<GrayImage> try_make_free_placement(TaskKind task, Rng& rng, int label) {
    std::vector<ShapeMask> store;
    std::vector<const ShapeMask*> instances;  // one entry per rendered figure

    if (task == TaskKind::sd1) {
        store = draw_distinct_set(rng, label == 1 ? 1 : 2);
        instances = label == 1 ? std::vector<const ShapeMask*>{&store[0], &store[0]}
                               : std::vector<const ShapeMask*>{&store[0], &store[1]};
    } else if (task == TaskKind::sd5) {
        store = draw_distinct_set(rng, label == 1 ? 2 : 4);
        instances = label == 1
                        ? std::vector<const ShapeMask*>{&store[0], &store[0], &store[1], &store[1]}
                        : std::vector<const ShapeMask*>{&store[0], &store[1], &store[2], &store[3]};
    } else if (task == TaskKind::sd15) {
        store = draw_distinct_set(rng, label == 1 ? 1 : 4);
        instances = label == 1
                        ? std::vector<const ShapeMask*>{&store[0], &store[0], &store[0], &store[0]}
                        : std::vector<const ShapeMask*>{&store[0], &store[1], &store[2], &store[3]};
    } else {
        throw std::logic_error("try_make_free_placement: unsupported task");
    }

    auto placement = place_masks(rng, instances, kImageSize, kImageSize);
    if (!placement) return std::nullopt;
    std::vector<Placed> figures;
    for (size_t i = 0; i < instances.size(); ++i)
        figures.push_back({instances[i], (*placement)[i].first, (*placement)[i].second});
    return render(figures);
}

// Three left-half instances mirrored to the right half about the vertical
// bisector. Class 1 mirrors the shape details too; class 2 only the
// positions.
std::optional<GrayImage> try_make_sd16(Rng& rng, int label) {
    const int size = rng.uniform_int(kMinFigure, 24);
    ShapeMask m = draw_mask(rng, size);
    ShapeMask mirrored = flip_horizontal(m);
    // The mirror test needs the shape to be visibly asymmetric.
    if (!masks_distinct(m, mirrored, kDistinctThreshold)) return std::nullopt;

    std::vector<const ShapeMask*> left = {&m, &m, &m};
    auto placement = place_masks(rng, left, kImageSize / 2, kImageSize);
    if (!placement) return std::nullopt;

    std::vector<Placed> figures;
    for (const auto& [x, y] : *placement) {
        figures.push_back({&m, x, y});
        const int mx = kImageSize - x - m.width;  // exact pixel-grid mirror
        figures.push_back({label == 1 ? &mirrored : &m, mx, y});
    }
    return render(figures);
}

// Three shapes with collinear, equally spaced centers. Class 1 repeats one
// shape; class 2 aligns three distinct shapes.
std::optional<GrayImage> try_make_sd22(Rng& rng, int label) {
    std::vector<ShapeMask> store;
    if (label == 1) {
        ShapeMask m = draw_mask(rng, rng.uniform_int(kMinFigure, kMaxFigure));
        store = {m, m, m};
    } else {
        ShapeMask a = draw_mask(rng, rng.uniform_int(kMinFigure, kMaxFigure));
        ShapeMask b = draw_distinct_mask(rng, rng.uniform_int(kMinFigure, kMaxFigure), {&a});
        ShapeMask c = draw_distinct_mask(rng, rng.uniform_int(kMinFigure, kMaxFigure), {&a, &b});
        store = {std::move(a), std::move(b), std::move(c)};
    }
    int max_dim = 0;
    for (const ShapeMask& m : store) max_dim = std::max({max_dim, m.width, m.height});

    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double theta = rng.uniform(0.0, 2.0 * M_PI);
        const double d = rng.uniform(0.8 * max_dim + 4.0, 50.0);
        const int vx = static_cast<int>(std::lround(d * std::cos(theta)));
        const int vy = static_cast<int>(std::lround(d * std::sin(theta)));
        if (vx == 0 && vy == 0) continue;
        const int c0x = rng.uniform_int(0, kImageSize - 1);
        const int c0y = rng.uniform_int(0, kImageSize - 1);

        std::vector<Placed> figures;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            const ShapeMask& m = store[i];
            const int cx = c0x + i * vx, cy = c0y + i * vy;
            const int x = cx - m.width / 2, y = cy - m.height / 2;
            if (x < kBorderMargin || y < kBorderMargin ||
                x + m.width > kImageSize - kBorderMargin ||
                y + m.height > kImageSize - kBorderMargin) {
                ok = false;
                break;
            }
            for (const Placed& f : figures)
                if (boxes_conflict(x, y, m.width, m.height, f.x, f.y, f.mask->width,
                                   f.mask->height)) {
                    ok = false;
                    break;
                }
            if (ok) figures.push_back({&m, x, y});
        }
        if (ok) return render(figures);
    }
    return std::nullopt;
}

LabeledImage make_sd_sample(TaskKind task, uint64_t sample_seed, int label) {
    Rng rng(sample_seed);
    for (int regen = 0; regen < 200; ++regen) {
        std::optional<GrayImage> img;
        switch (task) {
            case TaskKind::sd16: img = try_make_sd16(rng, label); break;
            case TaskKind::sd22: img = try_make_sd22(rng, label); break;
            default: img = try_make_free_placement(task, rng, label); break;
        }
        if (img) return LabeledImage{std::move(*img), label, task, sample_seed};
        // Placement failed; loop regenerates with freshly drawn shape sizes.
    }
    throw std::runtime_error(std::string("make_sd_sample: generation failed for ") +
                             to_string(task));
}

std::vector<LabeledImage> gen_sd(TaskKind task, uint64_t seed, int n) {
    if (n < 1) throw std::invalid_argument("gen_task: n must be >= 1");
    std::vector<LabeledImage> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const int label = i % 2 == 0 ? 1 : 2;
        const uint64_t s = derive_seed(seed, static_cast<uint64_t>(task) + 1, i);
        out.push_back(make_sd_sample(task, s, label));
    }
    return out;
}

}  // namespace

std::vector<LabeledImage> gen_task1(uint64_t seed, int n) { return gen_sd(TaskKind::sd1, seed, n); }
std::vector<LabeledImage> gen_task5(uint64_t seed, int n) { return gen_sd(TaskKind::sd5, seed, n); }
std::vector<LabeledImage> gen_task15(uint64_t seed, int n) { return gen_sd(TaskKind::sd15, seed, n); }
std::vector<LabeledImage> gen_task16(uint64_t seed, int n) { return gen_sd(TaskKind::sd16, seed, n); }
std::vector<LabeledImage> gen_task22(uint64_t seed, int n) { return gen_sd(TaskKind::sd22, seed, n); }

std::vector<LabeledImage> gen_task(TaskKind task, uint64_t seed, int n) {
    if (!is_sd_task(task)) throw std::invalid_argument("gen_task: not a same-different task");
    return gen_sd(task, seed, n);
}

GrayImage gen_bars(uint64_t seed, int period, bool with_unique_shapes) {
    if (period < 2 || period > 48) throw std::invalid_argument("gen_bars: period out of [2, 48]");
    Rng rng(seed);
    const int phase = rng.uniform_int(0, period - 1);
    // A ~3/8 duty cycle keeps every harmonic of the fundamental nonzero.
    const int dark = std::max(1, 3 * period / 8);

    GrayImage img(kImageSize, kImageSize, 1.0);
    for (int x = 0; x < kImageSize; ++x)
        if ((x + phase) % period < dark)
            for (int y = 0; y < kImageSize; ++y) img.at(x, y) = 0.0;

    if (with_unique_shapes) {
        const int count = rng.uniform_int(2, 3);
        std::vector<ShapeMask> store;
        std::vector<const ShapeMask*> ptrs;
        for (int i = 0; i < count; ++i) {
            store.push_back(draw_distinct_mask(rng, rng.uniform_int(16, 28), ptrs));
            ptrs.clear();
            for (const ShapeMask& m : store) ptrs.push_back(&m);
        }
        auto placement = place_masks(rng, ptrs, kImageSize, kImageSize);
        if (!placement) throw std::runtime_error("gen_bars: shape placement failed");
        for (size_t i = 0; i < ptrs.size(); ++i)
            blit(img, *ptrs[i], (*placement)[i].first, (*placement)[i].second);
    }
    return img;
}

namespace {

void fill_disc(GrayImage& img, double cx, double cy, double radius, double value) {
    const int r = static_cast<int>(radius) + 1;
    for (int y = -r; y <= r; ++y)
        for (int x = -r; x <= r; ++x)
            if (x * x + y * y <= radius * radius)
                img.at(static_cast<int>(cx) + x, static_cast<int>(cy) + y) = value;
}

void fill_bar(GrayImage& img, double cx, double cy, double angle_deg, double half_len,
              double half_thick, double value) {
    const double a = angle_deg * M_PI / 180.0;
    const double ux = std::cos(a), uy = std::sin(a);
    const int r = static_cast<int>(half_len) + 2;
    for (int y = -r; y <= r; ++y)
        for (int x = -r; x <= r; ++x) {
            const double along = x * ux + y * uy;
            const double across = -x * uy + y * ux;
            if (std::abs(along) <= half_len && std::abs(across) <= half_thick)
                img.at(static_cast<int>(cx) + x, static_cast<int>(cy) + y) = value;
        }
}

void draw_circle_arc(GrayImage& img, double cx, double cy, double radius, double gap_center_deg,
                     double gap_width_deg, double value) {
    for (int step = 0; step < 720; ++step) {
        const double deg = step * 0.5;
        double delta = std::fmod(deg - gap_center_deg + 540.0, 360.0) - 180.0;
        if (gap_width_deg > 0.0 && std::abs(delta) < gap_width_deg / 2.0) continue;
        const double a = deg * M_PI / 180.0;
        img.at(static_cast<int>(std::lround(cx + radius * std::cos(a))),
               static_cast<int>(std::lround(cy + radius * std::sin(a)))) = value;
    }
}

}  // namespace

GazePattern gen_gaze_pattern(TaskKind kind) {
    constexpr int kGrid = 4;
    constexpr int kCell = kImageSize / kGrid;
    constexpr int kOddCol = 2, kOddRow = 1;

    GazePattern pattern;
    pattern.image = GrayImage(kImageSize, kImageSize, 1.0);
    GrayImage& img = pattern.image;

    for (int row = 0; row < kGrid; ++row) {
        for (int col = 0; col < kGrid; ++col) {
            const double cx = kCell / 2.0 + col * kCell;
            const double cy = kCell / 2.0 + row * kCell;
            const bool odd = col == kOddCol && row == kOddRow;
            switch (kind) {
                case TaskKind::gaze_intensity:
                    fill_disc(img, cx, cy, 4.5, odd ? 0.05 : 0.55);
                    break;
                case TaskKind::gaze_orientation:
                    fill_bar(img, cx, cy, odd ? 135.0 : 45.0, 6.5, 1.5, 0.0);
                    break;
                case TaskKind::gaze_closure:
                    draw_circle_arc(img, cx, cy, 6.0, 0.0, odd ? 70.0 : 0.0, 0.0);
                    break;
                default:
                    throw std::invalid_argument("gen_gaze_pattern: not a gaze pattern kind");
            }
        }
    }
    pattern.target_box = PixelBox{kOddCol * kCell, kOddRow * kCell, (kOddCol + 1) * kCell,
                                  (kOddRow + 1) * kCell};
    return pattern;
}

RepeatedUniqueSample gen_repeated_plus_unique(uint64_t seed) {
    Rng rng(seed);
    for (int regen = 0; regen < 200; ++regen) {
        ShapeMask dup = draw_mask(rng, rng.uniform_int(kMinFigure, 26));
        ShapeMask uni = draw_distinct_mask(rng, rng.uniform_int(kMinFigure, 26), {&dup});
        std::vector<const ShapeMask*> instances = {&dup, &dup, &dup, &dup, &uni};
        auto placement = place_masks(rng, instances, kImageSize, kImageSize);
        if (!placement) continue;

        RepeatedUniqueSample sample;
        sample.image = GrayImage(kImageSize, kImageSize, 1.0);
        sample.duplicated_stroke.assign(static_cast<size_t>(kImageSize) * kImageSize, 0);
        sample.unique_stroke.assign(static_cast<size_t>(kImageSize) * kImageSize, 0);
        for (size_t i = 0; i < instances.size(); ++i) {
            const auto [px, py] = (*placement)[i];
            const ShapeMask& m = *instances[i];
            blit(sample.image, m, px, py);
            std::vector<uint8_t>& group =
                i < 4 ? sample.duplicated_stroke : sample.unique_stroke;
            for (int y = 0; y < m.height; ++y)
                for (int x = 0; x < m.width; ++x)
                    if (m.at(x, y))
                        group[static_cast<size_t>(py + y) * kImageSize + (px + x)] = 1;
        }
        return sample;
    }
    throw std::runtime_error("gen_repeated_plus_unique: generation failed");
}

}  // namespace specsal
