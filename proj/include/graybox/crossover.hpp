#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "graybox/bitvec.hpp"
#include "graybox/landscape.hpp"
#include "graybox/rational.hpp"
#include "graybox/rng.hpp"
#include "graybox/vig.hpp"

namespace graybox {

// Per-application result of a recombination operator.
//
// `qir` is unset when the best parent's fitness is not positive (the ratio
// cannot be normalized). `log2_explored` / `full_dynastic` apply only to the
// gray-box operators (PX, APX, DPX) and stay unset for UX and NX.
struct CrossoverReport {
    Solution offspring;
    std::int64_t fitness = 0;
    std::optional<Rational> qir;
    std::optional<std::int64_t> log2_explored;
    std::optional<bool> full_dynastic;
    bool log2_is_upper_bound = false; // APX beyond its enumeration threshold
    std::chrono::nanoseconds elapsed{0};
};

// Each differing variable independently from either parent with probability 1/2.
CrossoverReport uniform_crossover(const MkLandscape& landscape, const Solution& x,
                                  const Solution& y, Rng& rng);

// floor(n/2) variables picked by randomized breadth-first growth over the VIG
// (restarting from a uniform unselected variable when a component runs out)
// are taken from one parent chosen by fair coin, the rest from the other.
CrossoverReport network_crossover(const MkLandscape& landscape, const Vig& vig,
                                  const Solution& x, const Solution& y, Rng& rng);

// Partition crossover: each connected component of the recombination graph is
// inherited en bloc from the parent giving the larger partial sum (ties keep x).
CrossoverReport partition_crossover(const MkLandscape& landscape, const Vig& vig,
                                    const Solution& x, const Solution& y);

struct ApxOptions {
    // Explored-solution sets are enumerated and deduplicated exactly when
    // h(x,y) is at most this; beyond it the count is the per-application sum,
    // an upper bound flagged in the report.
    int exact_enumeration_max_h = 24;
    // Safety valve for the enumeration itself.
    std::uint64_t max_enumerated = std::uint64_t{1} << 22;
};

// Articulation points partition crossover by its defining semantics: PX of the
// parents plus, for every articulation point a of the recombination graph,
// PX(x, flip_a(y)) and PX(y, flip_a(x)); best candidate wins.
CrossoverReport articulation_points_crossover(const MkLandscape& landscape, const Vig& vig,
                                              const Solution& x, const Solution& y,
                                              const ApxOptions& options = {});

enum class CrossoverOp { Ux, Nx, Px, Apx, Dpx };

const char* to_string(CrossoverOp op);
std::optional<CrossoverOp> crossover_from_string(const std::string& name);

// Uniform dispatch used by the metaheuristics and the bench harness.
CrossoverReport apply_crossover(const MkLandscape& landscape, const Vig& vig, CrossoverOp op,
                                int beta, std::uint64_t max_table_entries, const Solution& x,
                                const Solution& y, Rng& rng);

} // namespace graybox
