#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "specsal/cli_commands.hpp"

namespace {

std::vector<specsal::TaskKind> parse_tasks(const std::vector<std::string>& names) {
    std::vector<specsal::TaskKind> tasks;
    for (const std::string& name : names) {
        auto kind = specsal::task_from_string(name);
        if (!kind) throw CLI::ValidationError("--task", "unknown task: " + name);
        tasks.push_back(*kind);
    }
    return tasks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"amplitude-spectrum filtering for same-different visual reasoning"};
    app.require_subcommand(1);

    // transform
    specsal::TransformOptions transform;
    CLI::App* t = app.add_subcommand("transform", "filter one image and write the result");
    t->add_option("input", transform.input, "input image (PGM or PNG)")->required();
    t->add_option("--feature", transform.feature, "raw, A, A_p, A_g or S_p")
        ->default_val("A_p");
    t->add_option("--p", transform.p, "percentile");
    t->add_option("--wf", transform.wf, "window fraction of image width");
    t->add_option("--sigma", transform.sigma, "Gaussian sigma in bins");
    t->add_option("--out", transform.output, "output PGM path")->required();

    // generate
    specsal::GenerateOptions generate;
    std::string generate_task = "sd1";
    CLI::App* g = app.add_subcommand("generate", "write a task dataset as PGM files");
    g->add_option("--task", generate_task, "task kind")->required();
    g->add_option("-n,--count", generate.count, "number of images");
    g->add_option("--seed", generate.seed, "dataset seed");
    g->add_option("--out", generate.out_dir, "output directory")->required();

    // evaluate
    specsal::EvaluateOptions evaluate;
    std::vector<std::string> eval_tasks = {"sd1", "sd5", "sd15", "sd16", "sd22"};
    CLI::App* e = app.add_subcommand("evaluate", "run the few-shot trial protocol");
    e->add_option("--task", eval_tasks, "task kinds")->delimiter(',');
    e->add_option("--feature", evaluate.features, "feature kinds")
        ->delimiter(',')
        ->default_val(std::vector<std::string>{"raw", "A", "A_p"});
    e->add_option("--p", evaluate.p, "percentile");
    e->add_option("--wf", evaluate.wf, "window fraction");
    e->add_option("--sigma", evaluate.sigma, "Gaussian sigma");
    e->add_option("--k", evaluate.k, "kNN neighbor count (odd)");
    e->add_option("--trials", evaluate.trials, "trial count");
    e->add_option("--shots", evaluate.shots, "labelled samples per trial");
    e->add_option("--test-size", evaluate.test_size, "test images per trial");
    e->add_option("--seed", evaluate.seed, "base seed");
    e->add_option("--out", evaluate.report_path, "CSV report path")->required();

    // sweep
    specsal::SweepOptions sweep;
    std::vector<std::string> sweep_tasks = {"sd1", "sd15"};
    CLI::App* s = app.add_subcommand("sweep", "grid-search filter parameters on validation data");
    s->add_option("--task", sweep_tasks, "task kinds")->delimiter(',');
    s->add_option("--p", sweep.grid.p_values, "percentile grid")->delimiter(',');
    s->add_option("--wf", sweep.grid.wf_values, "window fraction grid")->delimiter(',');
    s->add_option("--k", sweep.grid.k_values, "kNN k grid")->delimiter(',');
    s->add_option("--trials", sweep.val_trials, "validation trials per cell");
    s->add_option("--shots", sweep.shots, "labelled samples per trial");
    s->add_option("--test-size", sweep.test_size, "validation images per trial");
    s->add_option("--seed", sweep.seed, "base seed");
    s->add_option("--out", sweep.report_path, "CSV report path")->required();
    s->add_flag("--sigma-sweep", sweep.sigma_sweep, "sweep sigma for A_g instead of the grid");
    s->add_option("--sigma", sweep.sigmas, "sigma values for --sigma-sweep")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return specsal::kExitUsage;
    }

    try {
        if (t->parsed()) return specsal::cmd_transform(transform);
        if (g->parsed()) {
            auto kind = specsal::task_from_string(generate_task);
            if (!kind) {
                std::cerr << "specsal generate: unknown task: " << generate_task << "\n";
                return specsal::kExitUsage;
            }
            generate.task = *kind;
            return specsal::cmd_generate(generate);
        }
        if (e->parsed()) {
            evaluate.tasks = parse_tasks(eval_tasks);
            return specsal::cmd_evaluate(evaluate);
        }
        if (s->parsed()) {
            sweep.tasks = parse_tasks(sweep_tasks);
            return specsal::cmd_sweep(sweep);
        }
    } catch (const CLI::ValidationError& err) {
        std::cerr << err.what() << "\n";
        return specsal::kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "specsal: " << err.what() << "\n";
        return specsal::kExitRuntime;
    }
    return specsal::kExitUsage;
}
