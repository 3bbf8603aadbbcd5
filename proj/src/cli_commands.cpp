#include "specsal/cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "specsal/pgm.hpp"
#include "specsal/rng.hpp"
#include "specsal/spectral.hpp"

namespace fs = std::filesystem;

namespace specsal {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string format_accuracy(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string join_tasks(const std::vector<TaskKind>& tasks) {
    std::string s;
    for (size_t i = 0; i < tasks.size(); ++i) {
        if (i) s += ",";
        s += to_string(tasks[i]);
    }
    return s;
}

std::string join_strings(const std::vector<std::string>& items) {
    std::string s;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) s += ",";
        s += items[i];
    }
    return s;
}

// Log-scaled, center-shifted view of an amplitude spectrum for display.
GrayImage render_spectrum_display(AmplitudeSpectrum amp) {
    for (double& v : amp.data) v = std::log1p(v);
    const AmplitudeSpectrum shifted = fftshift(amp);
    GrayImage img(shifted.width, shifted.height);
    img.data = shifted.data;
    normalize_unit_range(img.data);
    return img;
}

}  // namespace

FeatureKind make_feature_kind(const std::string& name, double p, double wf, double sigma,
                              int width) {
    if (name == "raw") return FeatureKind::raw();
    if (name == "A" || name == "a") return FeatureKind::amplitude();
    if (name == "A_p" || name == "a_p")
        return FeatureKind::amplitude_percentile(PercentileFilterSpec::from_fraction(p, wf, width));
    if (name == "A_g" || name == "a_g")
        return FeatureKind::amplitude_gaussian(GaussianFilterSpec{sigma});
    if (name == "S_p" || name == "s_p")
        return FeatureKind::percentile_saliency(PercentileFilterSpec::from_fraction(p, wf, width));
    throw std::invalid_argument("unknown feature kind: " + name);
}

int cmd_transform(const TransformOptions& opt) {
    if (!fs::exists(opt.input)) {
        std::cerr << "specsal transform: no such file: " << opt.input << "\n";
        return kExitUsage;
    }
    try {
        const GrayImage img = read_gray_image(opt.input);
        FeatureKind kind;
        try {
            kind = make_feature_kind(opt.feature, opt.p, opt.wf, opt.sigma, img.width);
        } catch (const std::invalid_argument& e) {
            std::cerr << "specsal transform: " << e.what() << "\n";
            return kExitUsage;
        }

        GrayImage rendering;
        if (kind.type == FeatureKind::Type::raw) {
            rendering = normalize_image(img);
        } else if (kind.type == FeatureKind::Type::percentile_saliency) {
            const SaliencyMap map = percentile_saliency_map(img, *kind.percentile);
            rendering = GrayImage(map.width, map.height);
            rendering.data = map.data;
        } else {
            AmplitudeSpectrum amp(img.width, img.height);
            amp.data = extract_features(img, kind);
            rendering = render_spectrum_display(std::move(amp));
        }
        write_pgm(opt.output, rendering);

        std::ofstream sidecar(opt.output + ".params.txt");
        sidecar << "command=transform\n"
                << "input=" << opt.input << "\n"
                << "output=" << opt.output << "\n"
                << "feature=" << kind.name() << "\n";
        if (kind.percentile) {
            sidecar << "p=" << format_double(kind.percentile->p) << "\n"
                    << "w=" << kind.percentile->w << "\n"
                    << "wf=" << format_double(kind.percentile->window_fraction(img.width)) << "\n";
        }
        if (kind.gaussian) sidecar << "sigma=" << format_double(kind.gaussian->sigma) << "\n";
        if (!sidecar) throw std::runtime_error("cannot write sidecar");
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "specsal transform: " << e.what() << "\n";
        return kExitRuntime;
    }
}

int cmd_generate(const GenerateOptions& opt) {
    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    std::ofstream manifest(fs::path(opt.out_dir) / "manifest.csv");
    if (ec || !manifest) {
        std::cerr << "specsal generate: cannot write to " << opt.out_dir << "\n";
        return kExitUsage;
    }
    try {
        manifest << "# command=generate task=" << to_string(opt.task) << " n=" << opt.count
                 << " seed=" << opt.seed << "\n";

        struct Entry {
            std::string filename;
            int label;
            uint64_t seed;
            GrayImage image;
        };
        std::vector<Entry> entries;

        if (is_sd_task(opt.task)) {
            std::vector<LabeledImage> samples = gen_task(opt.task, opt.seed, opt.count);
            for (size_t i = 0; i < samples.size(); ++i) {
                char name[64];
                std::snprintf(name, sizeof(name), "%s_%d_%zu.pgm", to_string(opt.task),
                              samples[i].label, i);
                entries.push_back({name, samples[i].label, samples[i].seed,
                                   std::move(samples[i].image)});
            }
        } else if (opt.task == TaskKind::bars) {
            // Label 1 carries unique shapes over the stripes, label 2 is
            // stripes only; the stripe period cycles through Fig.-style scales.
            static constexpr int kPeriods[4] = {6, 8, 12, 16};
            for (int i = 0; i < opt.count; ++i) {
                const int label = i % 2 == 0 ? 1 : 2;
                const uint64_t s = derive_seed(opt.seed, 0xba55, i);
                GrayImage img = gen_bars(s, kPeriods[(i / 2) % 4], label == 1);
                char name[64];
                std::snprintf(name, sizeof(name), "bars_%d_%d.pgm", label, i);
                entries.push_back({name, label, s, std::move(img)});
            }
        } else {
            const GazePattern pattern = gen_gaze_pattern(opt.task);
            manifest << "# target_box=" << pattern.target_box.x0 << "," << pattern.target_box.y0
                     << "," << pattern.target_box.x1 << "," << pattern.target_box.y1 << "\n";
            for (int i = 0; i < opt.count; ++i) {
                char name[64];
                std::snprintf(name, sizeof(name), "%s_1_%d.pgm", to_string(opt.task), i);
                entries.push_back({name, 1, opt.seed, pattern.image});
            }
        }

        manifest << "filename,label,seed\n";
        for (const Entry& e : entries) {
            write_pgm((fs::path(opt.out_dir) / e.filename).string(), e.image);
            manifest << e.filename << "," << e.label << "," << e.seed << "\n";
        }
        if (!manifest) throw std::runtime_error("manifest write failed");
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "specsal generate: " << e.what() << "\n";
        return kExitRuntime;
    }
}

int cmd_evaluate(const EvaluateOptions& opt) {
    if (opt.tasks.empty() || opt.features.empty() || opt.report_path.empty()) {
        std::cerr << "specsal evaluate: need at least one task, one feature and a report path\n";
        return kExitUsage;
    }
    std::ofstream report(opt.report_path);
    if (!report) {
        std::cerr << "specsal evaluate: cannot write " << opt.report_path << "\n";
        return kExitUsage;
    }
    try {
        report << "# command=evaluate tasks=" << join_tasks(opt.tasks)
               << " features=" << join_strings(opt.features) << " p=" << format_double(opt.p)
               << " wf=" << format_double(opt.wf) << " sigma=" << format_double(opt.sigma)
               << " trials=" << opt.trials << " shots=" << opt.shots
               << " test_size=" << opt.test_size << " k=" << opt.k << " seed=" << opt.seed
               << "\n";
        report << "task,feature,params,trial,accuracy\n";

        std::vector<EvalReport> reports;
        for (TaskKind task : opt.tasks) {
            for (const std::string& feature : opt.features) {
                const FeatureKind kind =
                    make_feature_kind(feature, opt.p, opt.wf, opt.sigma, kImageSize);
                EvalReport r = run_trials(task, kind, opt.trials, opt.seed, opt.k, opt.shots,
                                          opt.test_size);
                for (size_t t = 0; t < r.per_trial.size(); ++t)
                    report << to_string(task) << "," << kind.name() << ","
                           << kind.params_string() << "," << t << ","
                           << format_accuracy(r.per_trial[t]) << "\n";
                report << to_string(task) << "," << kind.name() << "," << kind.params_string()
                       << ",mean," << format_accuracy(r.mean) << "\n";
                reports.push_back(std::move(r));
            }
        }

        const bool has_ordering_kinds =
            std::count(opt.features.begin(), opt.features.end(), "raw") &&
            (std::count(opt.features.begin(), opt.features.end(), "A") ||
             std::count(opt.features.begin(), opt.features.end(), "a")) &&
            (std::count(opt.features.begin(), opt.features.end(), "A_p") ||
             std::count(opt.features.begin(), opt.features.end(), "a_p"));
        if (has_ordering_kinds) {
            const OrderingVerdict verdict = ordering_report(reports);
            std::cout << "ordering: A_p (" << format_accuracy(verdict.mean_amplitude_percentile)
                      << ") vs A (" << format_accuracy(verdict.mean_amplitude) << ") vs raw ("
                      << format_accuracy(verdict.mean_raw) << ") -> "
                      << (verdict.holds ? "holds" : verdict.tie ? "does not hold (tie)"
                                                                : "does not hold")
                      << "\n";
        }
        if (!report) throw std::runtime_error("report write failed");
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "specsal evaluate: " << e.what() << "\n";
        return kExitRuntime;
    }
}

int cmd_sweep(const SweepOptions& opt) {
    if (opt.tasks.empty() || opt.report_path.empty()) {
        std::cerr << "specsal sweep: need at least one task and a report path\n";
        return kExitUsage;
    }
    std::ofstream report(opt.report_path);
    if (!report) {
        std::cerr << "specsal sweep: cannot write " << opt.report_path << "\n";
        return kExitUsage;
    }
    try {
        if (opt.sigma_sweep) {
            report << "# command=sweep mode=sigma tasks=" << join_tasks(opt.tasks)
                   << " trials=" << opt.val_trials << " shots=" << opt.shots
                   << " test_size=" << opt.test_size << " seed=" << opt.seed << "\n";
            report << "sigma,mean_accuracy\n";
            for (double sigma : opt.sigmas) {
                double total = 0.0;
                for (TaskKind task : opt.tasks) {
                    const EvalReport r = run_trials(
                        task, FeatureKind::amplitude_gaussian(GaussianFilterSpec{sigma}),
                        opt.val_trials, opt.seed, 1, opt.shots, opt.test_size,
                        SeedSpace::validation);
                    total += r.mean;
                }
                report << format_double(sigma) << ","
                       << format_accuracy(total / opt.tasks.size()) << "\n";
            }
            if (!report) throw std::runtime_error("report write failed");
            return kExitOk;
        }

        const GridChoice choice =
            grid_search(opt.tasks, opt.grid, opt.seed, FeatureKind::Type::amplitude_percentile,
                        opt.val_trials, opt.shots, opt.test_size);

        report << "# command=sweep mode=grid tasks=" << join_tasks(opt.tasks)
               << " trials=" << opt.val_trials << " shots=" << opt.shots
               << " test_size=" << opt.test_size << " seed=" << opt.seed << "\n";
        report << "p,wf";
        for (int k : opt.grid.k_values) report << ",k=" << k;
        report << ",best_k,best_accuracy\n";
        for (const GridCell& cell : choice.cells) {
            report << format_double(cell.p) << "," << format_double(cell.wf);
            for (const auto& [k, acc] : cell.accuracy_by_k) report << "," << format_accuracy(acc);
            report << "," << cell.best_k << "," << format_accuracy(cell.best_accuracy) << "\n";
        }
        report << "# selected p=" << format_double(choice.p) << " wf=" << format_double(choice.wf)
               << " k=" << choice.k << " accuracy=" << format_accuracy(choice.mean_accuracy)
               << "\n";
        std::cout << "selected p=" << format_double(choice.p)
                  << " wf=" << format_double(choice.wf) << " k=" << choice.k
                  << " accuracy=" << format_accuracy(choice.mean_accuracy) << "\n";
        if (!report) throw std::runtime_error("report write failed");
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "specsal sweep: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace specsal
