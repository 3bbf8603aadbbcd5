#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specsal/kernels.hpp"
#include "specsal/rank_filter.hpp"
#include "specsal/saliency.hpp"
#include "specsal/taskgen.hpp"

namespace specsal {

// Feature spaces a classifier can be run on: the image itself, its amplitude
// spectrum, the filtered spectra, or the percentile saliency map.
struct FeatureKind {
    enum class Type { raw, amplitude, amplitude_percentile, amplitude_gaussian, percentile_saliency };

    Type type = Type::raw;
    std::optional<PercentileFilterSpec> percentile;
    std::optional<GaussianFilterSpec> gaussian;

    static FeatureKind raw() { return {Type::raw, {}, {}}; }
    static FeatureKind amplitude() { return {Type::amplitude, {}, {}}; }
    static FeatureKind amplitude_percentile(PercentileFilterSpec spec) {
        return {Type::amplitude_percentile, spec, {}};
    }
    static FeatureKind amplitude_gaussian(GaussianFilterSpec spec) {
        return {Type::amplitude_gaussian, {}, spec};
    }
    static FeatureKind percentile_saliency(PercentileFilterSpec spec) {
        return {Type::percentile_saliency, spec, {}};
    }

    const char* name() const;          // "raw", "A", "A_p", "A_g", "S_p"
    std::string params_string() const; // "p=10 w=19" etc., empty for raw/A
};

// Flattened feature vector; length = width * height of the image.
std::vector<double> extract_features(const GrayImage& img, const FeatureKind& kind,
                                     SpectrumLayout layout = SpectrumLayout::unshifted);

// Nearest-neighbor classifier over stored vectors; no learning.
class KnnClassifier {
  public:
    static KnnClassifier fit(std::vector<std::vector<double>> features, std::vector<int> labels);

    // Majority label among the k nearest by Euclidean distance; distance ties
    // break toward the lower sample index. k must be odd and <= sample count.
    int predict(const std::vector<double>& query, int k) const;

    int sample_count() const { return static_cast<int>(labels_.size()); }

  private:
    std::vector<std::vector<double>> features_;
    std::vector<int> labels_;
};

// A few-shot trial: a small labelled train set and a large test set, both
// generated fresh from disjoint sub-seeds of trial_seed.
struct Episode {
    std::vector<LabeledImage> train;
    std::vector<LabeledImage> test;
    TaskKind task = TaskKind::sd1;
    uint64_t trial_seed = 0;
};

Episode make_episode(TaskKind task, uint64_t trial_seed, int shots = 10, int test_size = 1000);

// Fraction of test images classified correctly after fitting on the train set.
double run_episode(const Episode& episode, const FeatureKind& kind, int k);

struct EvalReport {
    TaskKind task = TaskKind::sd1;
    FeatureKind kind;
    int k = 1;
    int shots = 10;
    int test_size = 1000;
    uint64_t base_seed = 0;
    std::vector<double> per_trial;
    double mean = 0.0;
};

// Test episodes draw even trial seeds, validation episodes odd ones, so the
// two image populations never overlap.
enum class SeedSpace { test, validation };

uint64_t trial_seed_for(uint64_t base_seed, int trial, SeedSpace space);

EvalReport run_trials(TaskKind task, const FeatureKind& kind, int trials, uint64_t base_seed,
                      int k = 1, int shots = 10, int test_size = 1000,
                      SeedSpace space = SeedSpace::test);

struct GridSpec {
    std::vector<double> p_values = {5, 10, 20, 40};
    std::vector<double> wf_values = {0.05, 0.1, 0.2};
    std::vector<int> k_values = {1, 3, 5};
};

// Validation scores for one (p, wf) cell; per-k accuracies plus the best k.
struct GridCell {
    double p = 0.0;
    double wf = 0.0;
    std::vector<std::pair<int, double>> accuracy_by_k;
    int best_k = 1;
    double best_accuracy = 0.0;
};

struct GridChoice {
    double p = 0.0;
    double wf = 0.0;
    int k = 1;
    double mean_accuracy = 0.0;
    std::vector<GridCell> cells;
};

// Argmax over mean validation accuracy; ties break toward smaller wf, then
// smaller p, then smaller k. Exposed separately so the selection rule can be
// tested with injected scores.
GridChoice pick_grid_choice(const std::vector<GridCell>& cells);

// Exhaustive sweep of the grid on validation episodes (5 trials each by
// default), averaged over `tasks`.
GridChoice grid_search(const std::vector<TaskKind>& tasks, const GridSpec& grid,
                       uint64_t base_seed,
                       FeatureKind::Type family = FeatureKind::Type::amplitude_percentile,
                       int val_trials = 5, int shots = 10, int val_size = 1000);

struct OrderingRow {
    TaskKind task = TaskKind::sd1;
    double raw = 0.0;
    double amplitude = 0.0;
    double amplitude_percentile = 0.0;
};

// Verdict on whether mean(A_p) > mean(A) > mean(raw) across a task suite.
struct OrderingVerdict {
    bool holds = false;
    bool tie = false;
    double mean_raw = 0.0;
    double mean_amplitude = 0.0;
    double mean_amplitude_percentile = 0.0;
    std::vector<OrderingRow> rows;
};

// Requires raw, A and A_p reports for the same tasks and seeds; anything else
// is rejected.
OrderingVerdict ordering_report(const std::vector<EvalReport>& reports);

}  // namespace specsal
