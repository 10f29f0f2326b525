#include "graybox/ea.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace graybox {

const char* to_string(Selection s) {
    switch (s) {
    case Selection::Tournament:
        return "tournament";
    case Selection::Rank:
        return "rank";
    case Selection::Roulette:
        return "roulette";
    }
    return "?";
}

std::optional<Selection> selection_from_string(const std::string& name) {
    if (name == "tournament")
        return Selection::Tournament;
    if (name == "rank")
        return Selection::Rank;
    if (name == "roulette")
        return Selection::Roulette;
    return std::nullopt;
}

int select_tournament(std::span<const std::int64_t> fitness, Rng& rng) {
    const int a = static_cast<int>(rng.index(fitness.size()));
    const int b = static_cast<int>(rng.index(fitness.size()));
    return fitness[static_cast<std::size_t>(a)] >= fitness[static_cast<std::size_t>(b)] ? a : b;
}

int select_rank(std::span<const std::int64_t> fitness, Rng& rng) {
    const std::size_t n = fitness.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    // ascending fitness, ties by index: position p gets rank p+1 (worst rank 1)
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return fitness[static_cast<std::size_t>(a)] < fitness[static_cast<std::size_t>(b)];
    });
    const std::uint64_t total = static_cast<std::uint64_t>(n) * (n + 1) / 2;
    std::uint64_t draw = rng.below(total);
    for (std::size_t p = 0; p < n; ++p) {
        const std::uint64_t rank = p + 1;
        if (draw < rank)
            return order[p];
        draw -= rank;
    }
    return order[n - 1];
}

int select_roulette(std::span<const std::int64_t> fitness, Rng& rng) {
    const std::int64_t min_fit = *std::min_element(fitness.begin(), fitness.end());
    const std::int64_t shift = min_fit < 0 ? min_fit : 0;
    std::uint64_t total = 0;
    for (std::int64_t f : fitness)
        total += static_cast<std::uint64_t>(f - shift);
    if (total == 0)
        return static_cast<int>(rng.index(fitness.size()));
    std::uint64_t draw = rng.below(total);
    for (std::size_t i = 0; i < fitness.size(); ++i) {
        const std::uint64_t w = static_cast<std::uint64_t>(fitness[i] - shift);
        if (draw < w)
            return static_cast<int>(i);
        draw -= w;
    }
    return static_cast<int>(fitness.size()) - 1;
}

namespace {

int select(Selection scheme, std::span<const std::int64_t> fitness, Rng& rng) {
    switch (scheme) {
    case Selection::Tournament:
        return select_tournament(fitness, rng);
    case Selection::Rank:
        return select_rank(fitness, rng);
    case Selection::Roulette:
        return select_roulette(fitness, rng);
    }
    throw ContractViolation("unknown selection scheme");
}

void mutate(Solution& s, double p_m, Rng& rng) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (rng.unit() < p_m)
            s.flip(i);
}

} // namespace

SearchResult ea(const MkLandscape& landscape, const Vig& vig, const EaConfig& config) {
    if (config.popsize < 2)
        throw ContractViolation("ea population must have at least 2 members");
    if (config.p_m < 0.0 || config.p_m > 0.5)
        throw ContractViolation("ea mutation probability must be in [0, 0.5]");
    using Clock = std::chrono::steady_clock;
    const auto start_time = Clock::now();
    const auto deadline =
        start_time + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(config.time_limit_s));
    Rng rng = Rng::derive(config.seed, 0xea);

    std::vector<Solution> pop;
    std::vector<std::int64_t> fitness;
    pop.reserve(static_cast<std::size_t>(config.popsize));
    for (int i = 0; i < config.popsize; ++i) {
        pop.push_back(rng.random_solution(static_cast<std::size_t>(landscape.n())));
        fitness.push_back(landscape.evaluate(pop.back()));
    }

    SearchResult result;
    auto elapsed_ns = [&] {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start_time)
            .count();
    };
    {
        const std::size_t best0 = static_cast<std::size_t>(
            std::max_element(fitness.begin(), fitness.end()) - fitness.begin());
        result.best = pop[best0];
        result.best_fitness = fitness[best0];
        result.trajectory.push_back(TrajectoryPoint{elapsed_ns(), result.best_fitness, 0});
    }

    while ((config.max_iterations == 0 || result.iterations < config.max_iterations) &&
           Clock::now() < deadline) {
        ++result.iterations;
        const int xi = select(config.selection, fitness, rng);
        const int yi = select(config.selection, fitness, rng);
        Solution z;
        try {
            CrossoverReport r =
                apply_crossover(landscape, vig, config.op, config.beta,
                                config.max_table_entries, pop[static_cast<std::size_t>(xi)],
                                pop[static_cast<std::size_t>(yi)], rng);
            z = std::move(r.offspring);
        } catch (const BudgetError&) {
            ++result.crossover_budget_errors;
            continue;
        }
        mutate(z, config.p_m, rng);
        const std::int64_t fz = landscape.evaluate(z);
        const std::size_t worst = static_cast<std::size_t>(
            std::min_element(fitness.begin(), fitness.end()) - fitness.begin());
        if (fz > fitness[worst]) {
            pop[worst] = std::move(z);
            fitness[worst] = fz;
            if (fz > result.best_fitness) {
                result.best = pop[worst];
                result.best_fitness = fz;
                result.trajectory.push_back(
                    TrajectoryPoint{elapsed_ns(), fz, result.iterations});
            }
        }
    }
    return result;
}

} // namespace graybox
