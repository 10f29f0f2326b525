#pragma once

#include <span>

#include "graybox/crossover.hpp"
#include "graybox/search.hpp"
#include "graybox/vig.hpp"

namespace graybox {

enum class Selection { Tournament, Rank, Roulette };

const char* to_string(Selection s);
std::optional<Selection> selection_from_string(const std::string& name);

struct EaConfig {
    int popsize = 50;                    // at least 2
    double p_m = 0.01;                   // per-bit mutation probability, in [0, 0.5]
    Selection selection = Selection::Tournament;
    CrossoverOp op = CrossoverOp::Dpx;
    int beta = 1;
    std::uint64_t max_table_entries = std::uint64_t{1} << 26;
    double time_limit_s = 60.0;
    std::uint64_t max_iterations = 0; // 0 = until the time limit; set for bit-reproducible runs
    std::uint64_t seed = 0;
};

// Steady-state EA: select two parents, recombine, mutate, and replace the
// worst individual only on strict improvement. Crossover budget errors skip
// the iteration and are counted.
SearchResult ea(const MkLandscape& landscape, const Vig& vig, const EaConfig& config);

// Selection primitives, exposed for distribution tests.
// Binary tournament with replacement; the first pick wins ties.
int select_tournament(std::span<const std::int64_t> fitness, Rng& rng);
// Linear rank selection: probability proportional to rank, worst rank 1.
int select_rank(std::span<const std::int64_t> fitness, Rng& rng);
// Fitness-proportional; fitness shifted by the population minimum when any
// value is negative. A zero total falls back to uniform.
int select_roulette(std::span<const std::int64_t> fitness, Rng& rng);

} // namespace graybox
