#pragma once

#include <cstdint>
#include <vector>

#include "graybox/bitvec.hpp"

namespace graybox {

// One best-so-far improvement: wall-clock offset from the start of the run,
// the new best fitness, and the iteration that produced it.
struct TrajectoryPoint {
    std::int64_t t_ns = 0;
    std::int64_t fitness = 0;
    std::uint64_t iteration = 0;
};

struct SearchResult {
    Solution best;
    std::int64_t best_fitness = 0;
    std::vector<TrajectoryPoint> trajectory;
    std::uint64_t iterations = 0;
    std::uint64_t crossover_budget_errors = 0;
};

} // namespace graybox
