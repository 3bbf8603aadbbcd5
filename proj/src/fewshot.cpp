#include "specsal/fewshot.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "specsal/rng.hpp"
#include "specsal/spectral.hpp"

namespace specsal {

namespace {

constexpr uint64_t kTrainStream = 0x7261696e;  // sub-seed tags
constexpr uint64_t kTestStream = 0x74657374;

AmplitudeSpectrum amplitude_of(const GrayImage& img) {
    return split_amp_phase(dft2_forward(img)).first;
}

AmplitudeSpectrum filter_in_layout(const AmplitudeSpectrum& amp, SpectrumLayout layout,
                                   const auto& filter) {
    if (layout == SpectrumLayout::centered) return fftshift_inverse(filter(fftshift(amp)));
    return filter(amp);
}

double mean_of(const std::vector<double>& v) {
    return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

}  // namespace

const char* FeatureKind::name() const {
    switch (type) {
        case Type::raw: return "raw";
        case Type::amplitude: return "A";
        case Type::amplitude_percentile: return "A_p";
        case Type::amplitude_gaussian: return "A_g";
        case Type::percentile_saliency: return "S_p";
    }
    return "unknown";
}

std::string FeatureKind::params_string() const {
    char buf[96];
    switch (type) {
        case Type::amplitude_percentile:
        case Type::percentile_saliency:
            if (!percentile) return "missing";
            std::snprintf(buf, sizeof(buf), "p=%g w=%d", percentile->p, percentile->w);
            return buf;
        case Type::amplitude_gaussian:
            if (!gaussian) return "missing";
            std::snprintf(buf, sizeof(buf), "sigma=%g", gaussian->sigma);
            return buf;
        default: return "";
    }
}

std::vector<double> extract_features(const GrayImage& img, const FeatureKind& kind,
                                     SpectrumLayout layout) {
    if (img.empty()) throw std::invalid_argument("extract_features: empty image");
    switch (kind.type) {
        case FeatureKind::Type::raw: return normalize_image(img).data;
        case FeatureKind::Type::amplitude: return amplitude_of(img).data;
        case FeatureKind::Type::amplitude_percentile: {
            if (!kind.percentile)
                throw std::invalid_argument("extract_features: A_p requires percentile params");
            return filter_in_layout(amplitude_of(img), layout, [&](const AmplitudeSpectrum& a) {
                       return percentile_filter_fast(a, *kind.percentile);
                   }).data;
        }
        case FeatureKind::Type::amplitude_gaussian: {
            if (!kind.gaussian)
                throw std::invalid_argument("extract_features: A_g requires gaussian params");
            const LowPassKernel kernel = gaussian_kernel(*kind.gaussian);
            return filter_in_layout(amplitude_of(img), layout, [&](const AmplitudeSpectrum& a) {
                       return convolve2(a, kernel);
                   }).data;
        }
        case FeatureKind::Type::percentile_saliency: {
            if (!kind.percentile)
                throw std::invalid_argument("extract_features: S_p requires percentile params");
            return percentile_saliency_map(img, *kind.percentile, layout).data;
        }
    }
    throw std::logic_error("extract_features: unhandled kind");
}

KnnClassifier KnnClassifier::fit(std::vector<std::vector<double>> features,
                                 std::vector<int> labels) {
    if (features.empty() || features.size() != labels.size())
        throw std::invalid_argument("KnnClassifier::fit: features/labels size mismatch");
    const size_t dim = features.front().size();
    for (const auto& f : features)
        if (f.size() != dim) throw std::invalid_argument("KnnClassifier::fit: ragged features");
    std::set<int> distinct(labels.begin(), labels.end());
    if (distinct.size() < 2)
        throw std::invalid_argument("KnnClassifier::fit: training set has a single class");

    KnnClassifier c;
    c.features_ = std::move(features);
    c.labels_ = std::move(labels);
    return c;
}

int KnnClassifier::predict(const std::vector<double>& query, int k) const {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("KnnClassifier::predict: k must be odd");
    if (k > sample_count())
        throw std::invalid_argument("KnnClassifier::predict: k exceeds training size");
    if (query.size() != features_.front().size())
        throw std::invalid_argument("KnnClassifier::predict: dimension mismatch");

    std::vector<std::pair<double, int>> dist(features_.size());
    for (size_t i = 0; i < features_.size(); ++i) {
        const std::vector<double>& f = features_[i];
        double d2 = 0.0;
        for (size_t j = 0; j < f.size(); ++j) {
            const double d = f[j] - query[j];
            d2 += d * d;
        }
        dist[i] = {d2, static_cast<int>(i)};
    }
    // Ties in distance break toward the lower sample index.
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());

    std::map<int, int> votes;
    for (int i = 0; i < k; ++i) ++votes[labels_[dist[i].second]];
    int best_label = labels_[dist[0].second], best_votes = 0;
    for (int i = 0; i < k; ++i) {
        const int label = labels_[dist[i].second];
        if (votes[label] > best_votes) {
            best_votes = votes[label];
            best_label = label;
        }
    }
    return best_label;
}

Episode make_episode(TaskKind task, uint64_t trial_seed, int shots, int test_size) {
    Episode ep;
    ep.task = task;
    ep.trial_seed = trial_seed;
    ep.train = gen_task(task, derive_seed(trial_seed, kTrainStream), shots);
    ep.test = gen_task(task, derive_seed(trial_seed, kTestStream), test_size);
    return ep;
}

double run_episode(const Episode& episode, const FeatureKind& kind, int k) {
    std::vector<std::vector<double>> train_features;
    std::vector<int> train_labels;
    train_features.reserve(episode.train.size());
    for (const LabeledImage& sample : episode.train) {
        train_features.push_back(extract_features(sample.image, kind));
        train_labels.push_back(sample.label);
    }
    const KnnClassifier classifier = KnnClassifier::fit(std::move(train_features),
                                                        std::move(train_labels));
    int correct = 0;
    for (const LabeledImage& sample : episode.test)
        correct += classifier.predict(extract_features(sample.image, kind), k) == sample.label;
    return static_cast<double>(correct) / episode.test.size();
}

uint64_t trial_seed_for(uint64_t base_seed, int trial, SeedSpace space) {
    const uint64_t s = derive_seed(base_seed, 0x747269616c, trial);
    return 2 * s + (space == SeedSpace::validation ? 1 : 0);
}

EvalReport run_trials(TaskKind task, const FeatureKind& kind, int trials, uint64_t base_seed,
                      int k, int shots, int test_size, SeedSpace space) {
    if (trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");
    EvalReport report;
    report.task = task;
    report.kind = kind;
    report.k = k;
    report.shots = shots;
    report.test_size = test_size;
    report.base_seed = base_seed;
    for (int t = 0; t < trials; ++t) {
        const Episode ep = make_episode(task, trial_seed_for(base_seed, t, space), shots, test_size);
        report.per_trial.push_back(run_episode(ep, kind, k));
    }
    report.mean = mean_of(report.per_trial);
    return report;
}

GridChoice pick_grid_choice(const std::vector<GridCell>& cells) {
    if (cells.empty()) throw std::invalid_argument("pick_grid_choice: no cells");
    GridChoice choice;
    choice.cells = cells;
    bool first = true;
    for (const GridCell& cell : cells) {
        for (const auto& [k, acc] : cell.accuracy_by_k) {
            // Strictly-better wins; ties prefer smaller wf, then p, then k.
            const bool better =
                first || acc > choice.mean_accuracy ||
                (acc == choice.mean_accuracy &&
                 std::tuple(cell.wf, cell.p, k) < std::tuple(choice.wf, choice.p, choice.k));
            if (better) {
                choice.p = cell.p;
                choice.wf = cell.wf;
                choice.k = k;
                choice.mean_accuracy = acc;
                first = false;
            }
        }
    }
    return choice;
}

GridChoice grid_search(const std::vector<TaskKind>& tasks, const GridSpec& grid,
                       uint64_t base_seed, FeatureKind::Type family, int val_trials, int shots,
                       int val_size) {
    if (tasks.empty() || grid.p_values.empty() || grid.wf_values.empty() || grid.k_values.empty())
        throw std::invalid_argument("grid_search: empty grid or task set");
    if (family != FeatureKind::Type::amplitude_percentile &&
        family != FeatureKind::Type::percentile_saliency)
        throw std::invalid_argument("grid_search: grid applies to percentile feature kinds");

    std::vector<GridCell> cells;
    for (double wf : grid.wf_values) {
        for (double p : grid.p_values) {
            const PercentileFilterSpec spec = PercentileFilterSpec::from_fraction(p, wf, kImageSize);
            const FeatureKind kind = family == FeatureKind::Type::amplitude_percentile
                                         ? FeatureKind::amplitude_percentile(spec)
                                         : FeatureKind::percentile_saliency(spec);
            GridCell cell;
            cell.p = p;
            cell.wf = wf;
            // Features are shared across k values within a cell: fit once per
            // episode, query with each k.
            std::vector<std::pair<int, double>> totals;
            for (int k : grid.k_values) totals.emplace_back(k, 0.0);
            int episodes = 0;
            for (TaskKind task : tasks) {
                for (int t = 0; t < val_trials; ++t) {
                    const Episode ep = make_episode(
                        task, trial_seed_for(base_seed, t, SeedSpace::validation), shots, val_size);
                    std::vector<std::vector<double>> train_features;
                    std::vector<int> train_labels;
                    for (const LabeledImage& s : ep.train) {
                        train_features.push_back(extract_features(s.image, kind));
                        train_labels.push_back(s.label);
                    }
                    const KnnClassifier classifier =
                        KnnClassifier::fit(std::move(train_features), std::move(train_labels));
                    std::vector<int> correct(grid.k_values.size(), 0);
                    for (const LabeledImage& s : ep.test) {
                        const std::vector<double> f = extract_features(s.image, kind);
                        for (size_t ki = 0; ki < grid.k_values.size(); ++ki)
                            correct[ki] += classifier.predict(f, grid.k_values[ki]) == s.label;
                    }
                    for (size_t ki = 0; ki < grid.k_values.size(); ++ki)
                        totals[ki].second += static_cast<double>(correct[ki]) / ep.test.size();
                    ++episodes;
                }
            }
            for (auto& [k, total] : totals) total /= episodes;
            cell.accuracy_by_k = totals;
            cell.best_k = totals.front().first;
            cell.best_accuracy = totals.front().second;
            for (const auto& [k, acc] : totals)
                if (acc > cell.best_accuracy) {
                    cell.best_k = k;
                    cell.best_accuracy = acc;
                }
            cells.push_back(std::move(cell));
        }
    }
    return pick_grid_choice(cells);
}

OrderingVerdict ordering_report(const std::vector<EvalReport>& reports) {
    std::map<TaskKind, OrderingRow> by_task;
    std::set<uint64_t> seeds;
    std::map<TaskKind, int> kinds_seen;
    for (const EvalReport& r : reports) {
        seeds.insert(r.base_seed);
        OrderingRow& row = by_task[r.task];
        row.task = r.task;
        switch (r.kind.type) {
            case FeatureKind::Type::raw: row.raw = r.mean; break;
            case FeatureKind::Type::amplitude: row.amplitude = r.mean; break;
            case FeatureKind::Type::amplitude_percentile: row.amplitude_percentile = r.mean; break;
            default: continue;  // other kinds do not participate in the ordering
        }
        ++kinds_seen[r.task];
    }
    if (seeds.size() != 1)
        throw std::invalid_argument("ordering_report: reports use mismatched seeds");
    if (by_task.empty()) throw std::invalid_argument("ordering_report: no reports");
    for (const auto& [task, count] : kinds_seen)
        if (count != 3)
            throw std::invalid_argument("ordering_report: need raw, A and A_p for every task");

    OrderingVerdict verdict;
    for (const auto& [task, row] : by_task) {
        verdict.rows.push_back(row);
        verdict.mean_raw += row.raw;
        verdict.mean_amplitude += row.amplitude;
        verdict.mean_amplitude_percentile += row.amplitude_percentile;
    }
    const double n = static_cast<double>(verdict.rows.size());
    verdict.mean_raw /= n;
    verdict.mean_amplitude /= n;
    verdict.mean_amplitude_percentile /= n;
    verdict.holds = verdict.mean_amplitude_percentile > verdict.mean_amplitude &&
                    verdict.mean_amplitude > verdict.mean_raw;
    verdict.tie = verdict.mean_amplitude_percentile == verdict.mean_amplitude ||
                  verdict.mean_amplitude == verdict.mean_raw;
    return verdict;
}

}  // namespace specsal
