#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "misfit/csv.hpp"
#include "misfit/experiment.hpp"
#include "misfit/network.hpp"
#include "misfit/presets.hpp"

namespace {

std::string histogram_path(const std::string& out) {
    std::filesystem::path p(out);
    const auto stem = p.stem().string();
    return (p.parent_path() / (stem + "_histogram.csv")).string();
}

int run_command(const std::string& config_path, const std::string& out_path,
                std::optional<std::uint64_t> seed, std::optional<unsigned> workers, bool histogram) {
    misfit::ExperimentPlan plan = misfit::parse_config_file(config_path);
    if (seed) plan.master_seed = *seed;
    if (histogram && out_path.empty()) {
        std::cerr << "error: --histogram needs --out\n";
        return 2;
    }

    misfit::SweepOptions options;
    options.workers = workers.value_or(misfit::default_worker_count());
    options.histogram = histogram;
    const auto result = misfit::run_sweep(plan, options);

    if (out_path.empty()) {
        misfit::write_csv(result.records, std::cout);
        std::cout.flush();
        if (!std::cout) return 1;
    } else {
        misfit::write_csv(result.records, out_path);
    }
    if (histogram) {
        const auto path = histogram_path(out_path);
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + path + "'");
        misfit::write_histogram_csv(result.histogram, misfit::LogHistogram::standard(), out);
        if (!out.flush()) throw std::runtime_error("failed writing '" + path + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"misfit-sim: market evolution and technology adoption simulations"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
    bool histogram = false;
    run->add_option("--config", config_path, "Experiment config file")->required()->check(CLI::ExistingFile);
    run->add_option("--out", out_path, "Output CSV (stdout when omitted)");
    run->add_option("--seed", seed, "Override master_seed");
    run->add_option("--workers", workers, "Worker threads (default: $MISFIT_SIM_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    run->add_flag("--histogram", histogram, "Also write <out>_histogram.csv of final valuations");

    auto* list = app.add_subcommand("presets", "List built-in experiment plans, or print one");
    std::string preset_name;
    list->add_option("name", preset_name, "Preset to print as a config file");

    auto* graph = app.add_subcommand("graph", "Write a Newman-Watts-Strogatz edge list");
    misfit::NetworkSpec spec;
    std::uint64_t graph_seed = 0;
    std::string graph_out;
    graph->add_option("--n", spec.n, "Nodes")->required();
    graph->add_option("--k", spec.k, "Lattice degree (even)")->required();
    graph->add_option("--beta", spec.beta, "Shortcut probability per lattice edge")->required();
    graph->add_option("--seed", graph_seed, "RNG seed");
    graph->add_option("--out", graph_out, "Edge list path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return run_command(config_path, out_path, seed, workers, histogram);
        if (*list) {
            if (preset_name.empty()) {
                for (const auto& p : misfit::presets()) std::cout << p.name << "\t" << p.description << "\n";
                return 0;
            }
            const auto* p = misfit::find_preset(preset_name);
            if (p == nullptr) {
                std::cerr << "error: unknown preset '" << preset_name << "'\n";
                return 2;
            }
            std::cout << p->config_text;
            return 0;
        }
        if (*graph) {
            misfit::Rng rng(graph_seed);
            const auto g = misfit::generate_nws(spec, rng);
            if (graph_out.empty()) {
                g.write_edge_list(std::cout);
            } else {
                std::ofstream out(graph_out);
                if (!out) throw std::runtime_error("cannot write '" + graph_out + "'");
                g.write_edge_list(out);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
