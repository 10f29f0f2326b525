#include "graybox/drils.hpp"

#include <chrono>

#include "graybox/hill_climber.hpp"

namespace graybox {

SearchResult drils(const MkLandscape& landscape, const Vig& vig, const DrilsConfig& config) {
    if (config.alpha < 0.0 || config.alpha > 0.5)
        throw ContractViolation("drils alpha must be in [0, 0.5]");
    using Clock = std::chrono::steady_clock;
    const auto start_time = Clock::now();
    const auto deadline =
        start_time + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(config.time_limit_s));
    Rng rng = Rng::derive(config.seed, 0xd8115);

    SearchResult result;
    HillClimber climber(landscape);

    auto elapsed_ns = [&] {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start_time)
            .count();
    };
    auto record_best = [&](const Solution& s, std::int64_t f) {
        if (result.trajectory.empty() || f > result.best_fitness) {
            result.best = s;
            result.best_fitness = f;
            result.trajectory.push_back(TrajectoryPoint{elapsed_ns(), f, result.iterations});
        }
    };

    Solution x = climber.climb(rng.random_solution(static_cast<std::size_t>(landscape.n())), rng);
    std::int64_t fx = climber.last_fitness();
    record_best(x, fx);

    while ((config.max_iterations == 0 || result.iterations < config.max_iterations) &&
           Clock::now() < deadline) {
        ++result.iterations;
        Solution y = climber.climb(perturb(x, config.alpha, rng), rng);
        const std::int64_t fy = climber.last_fitness();
        record_best(y, fy);

        Solution z;
        bool z_is_parent = false;
        try {
            CrossoverReport r = apply_crossover(landscape, vig, config.op, config.beta,
                                                config.max_table_entries, x, y, rng);
            z = std::move(r.offspring);
        } catch (const BudgetError&) {
            ++result.crossover_budget_errors;
            z_is_parent = true; // fall back to z = y
        }
        if (z_is_parent || z == x || z == y) {
            x = std::move(y);
            fx = fy;
        } else {
            x = climber.climb(z, rng);
            fx = climber.last_fitness();
            record_best(x, fx);
        }
    }
    return result;
}

} // namespace graybox
