#include "graybox/idpx.hpp"

#include <chrono>

#include "graybox/dpx.hpp"

namespace graybox {

SearchResult idpx(const MkLandscape& landscape, const Vig& vig, const IdpxConfig& config) {
    using Clock = std::chrono::steady_clock;
    const auto start_time = Clock::now();
    const auto deadline =
        start_time + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(config.time_limit_s));
    Rng rng = Rng::derive(config.seed, 0x1d9);

    DpxOptions options;
    options.beta = config.beta;
    options.max_table_entries = config.max_table_entries;

    SearchResult result;
    bool have_best = false;
    do {
        ++result.iterations;
        const Solution x = rng.random_solution(static_cast<std::size_t>(landscape.n()));
        const Solution y = x.complement();
        try {
            CrossoverReport r = dpx(landscape, vig, x, y, options);
            if (!have_best || r.fitness > result.best_fitness) {
                result.best = std::move(r.offspring);
                result.best_fitness = r.fitness;
                have_best = true;
                result.trajectory.push_back(TrajectoryPoint{
                    std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                                         start_time)
                        .count(),
                    result.best_fitness, result.iterations});
            }
        } catch (const BudgetError&) {
            ++result.crossover_budget_errors;
        }
    } while ((config.max_iterations == 0 || result.iterations < config.max_iterations) &&
             Clock::now() < deadline);
    return result;
}

} // namespace graybox
