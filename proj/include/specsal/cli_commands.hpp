#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specsal/fewshot.hpp"

namespace specsal {

// Exit codes: 0 success, 1 runtime failure, 2 usage/IO error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Builds a feature kind from CLI-style parameters; w derives from wf at the
// given image width.
FeatureKind make_feature_kind(const std::string& name, double p, double wf, double sigma,
                              int width);

struct TransformOptions {
    std::string input;
    std::string output;
    std::string feature = "A_p";
    double p = 10.0;
    double wf = 0.2;
    double sigma = 2.0;
};

// Writes the chosen representation of one image as 8-bit PGM; spectra are
// rendered log-scaled and center-shifted (display only). A sidecar
// `<out>.params.txt` records the exact parameters used.
int cmd_transform(const TransformOptions& opt);

struct GenerateOptions {
    TaskKind task = TaskKind::sd1;
    int count = 20;
    uint64_t seed = 0;
    std::string out_dir;
};

// Writes `<task>_<label>_<index>.pgm` files plus manifest.csv.
int cmd_generate(const GenerateOptions& opt);

struct EvaluateOptions {
    std::vector<TaskKind> tasks;
    std::vector<std::string> features;  // raw, A, A_p, A_g, S_p
    double p = 10.0;
    double wf = 0.2;
    double sigma = 2.0;
    int trials = 10;
    int shots = 10;
    int test_size = 1000;
    int k = 1;
    uint64_t seed = 0;
    std::string report_path;
};

// Runs the trial protocol per (task, feature) pair and writes a CSV report;
// prints the feature-ordering verdict when raw, A and A_p are all present.
int cmd_evaluate(const EvaluateOptions& opt);

struct SweepOptions {
    std::vector<TaskKind> tasks;
    GridSpec grid;
    int val_trials = 5;
    int shots = 10;
    int test_size = 1000;
    uint64_t seed = 0;
    std::string report_path;
    bool sigma_sweep = false;
    std::vector<double> sigmas = {0.5, 1.0, 2.0, 4.0, 8.0};
};

// Exhaustive validation sweep over the (p, wf, k) grid, or accuracy vs sigma
// for the Gaussian-filtered spectra when sigma_sweep is set.
int cmd_sweep(const SweepOptions& opt);

}  // namespace specsal
