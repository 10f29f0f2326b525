#pragma once

#include "graybox/crossover.hpp"
#include "graybox/search.hpp"
#include "graybox/vig.hpp"

namespace graybox {

struct DrilsConfig {
    double alpha = 0.2;                 // perturbation factor, in [0, 0.5]
    CrossoverOp op = CrossoverOp::Dpx;
    int beta = 1;
    std::uint64_t max_table_entries = std::uint64_t{1} << 26;
    double time_limit_s = 60.0;
    std::uint64_t max_iterations = 0; // 0 = until the time limit; set for bit-reproducible runs
    std::uint64_t seed = 0;
};

// Deterministic recombination and iterated local search: climb from a random
// solution, then repeatedly perturb + climb to get a second parent, recombine,
// and climb the offspring unless crossover returned a parent (then restart
// from the perturbed optimum). A crossover budget error is treated as the
// offspring being the second parent and counted in the result.
SearchResult drils(const MkLandscape& landscape, const Vig& vig, const DrilsConfig& config);

} // namespace graybox
