#include "misfit/experiment.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace misfit {

namespace {
constexpr std::uint64_t kNetworkStream = 1;
}  // namespace

RunResult run_experiment(const ModelConfig& config, std::uint64_t seed) {
    config.validate();
    const TaxPolicy tax = TaxPolicy::preset(config.tax);
    Rng rng(seed);
    RunResult result;
    result.series.reserve(static_cast<std::size_t>(config.economy.n_periods));

    if (config.model == ModelKind::Static) {
        PopulationState pop = initial_population(config.economy, nullptr, rng);
        for (int t = 0; t < config.economy.n_periods; ++t)
            result.series.push_back(run_static_period(pop, config.economy, tax, rng));
        result.final_valuations = valuations(pop);
    } else {
        const DynamicModelConfig dyn = config.dynamic();
        // The network draws from its own stream so the same seed gives the same
        // population and shocks at every beta.
        Rng graph_rng(stream_seed(seed, kNetworkStream));
        const Graph graph = generate_nws(dyn.network, graph_rng);
        PopulationState pop = initial_population(dyn.economy, &dyn.adoption, rng);
        for (int t = 0; t < dyn.economy.n_periods; ++t)
            result.series.push_back(run_dynamic_period(pop, graph, dyn, tax, rng));
        result.final_valuations = valuations(pop);
    }
    return result;
}

unsigned default_worker_count() {
    if (const char* env = std::getenv("MISFIT_SIM_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace {

// Runs task(i) for i in [0, count) on `workers` threads; rethrows the first failure.
template <typename Task>
void parallel_for(std::size_t count, unsigned workers, Task&& task) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
}

std::string describe(const GridPoint& point, std::size_t index) {
    std::string s = "grid point " + std::to_string(index);
    for (const auto& [name, value] : point.params) s += " " + name + "=" + value;
    return s;
}

}  // namespace

std::vector<RunResult> run_replicates(const ModelConfig& config, std::size_t n_runs,
                                      std::uint64_t master_seed, std::uint32_t point_index,
                                      unsigned workers) {
    config.validate();
    std::vector<RunResult> results(n_runs);
    parallel_for(n_runs, workers, [&](std::size_t r) {
        results[r] = run_experiment(config, derive_seed(master_seed, point_index, static_cast<std::uint32_t>(r)));
    });
    return results;
}

SweepResult run_sweep(const ExperimentPlan& plan, const SweepOptions& options) {
    plan.validate();
    const auto points = plan.grid();
    const std::size_t runs = plan.n_runs;

    // Only the per-run series and histogram counts are kept, not the valuations.
    std::vector<std::vector<PeriodStats>> series(points.size() * runs);
    std::vector<std::vector<std::size_t>> counts(options.histogram ? series.size() : 0);
    const LogHistogram bins = LogHistogram::standard();

    parallel_for(series.size(), options.workers, [&](std::size_t task) {
        const std::size_t p = task / runs;
        const std::size_t r = task % runs;
        try {
            RunResult result = run_experiment(
                points[p].config,
                derive_seed(plan.master_seed, static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(r)));
            if (options.histogram) counts[task] = bins.counts(result.final_valuations);
            series[task] = std::move(result.series);
        } catch (const std::exception& e) {
            throw std::runtime_error(describe(points[p], p) + ": " + e.what());
        }
    });

    SweepResult out;
    const auto& names = statistic_names();
    for (std::size_t p = 0; p < points.size(); ++p) {
        const std::span<const std::vector<PeriodStats>> block(series.data() + p * runs, runs);
        for (const auto& period : aggregate_runs(block)) {
            for (std::size_t s = 0; s < names.size(); ++s) {
                out.records.push_back(RunRecord{points[p].params, period.period, names[s],
                                                period.values[s].mean, period.values[s].std, runs});
            }
        }
        if (options.histogram) {
            std::vector<double> column(runs);
            for (std::size_t b = 0; b < bins.bin_count(); ++b) {
                for (std::size_t r = 0; r < runs; ++r) column[r] = static_cast<double>(counts[p * runs + r][b]);
                out.histogram.push_back(HistogramRecord{points[p].params, b, bins.edges[b], mean_std(column)});
            }
        }
    }
    return out;
}

}  // namespace misfit
