#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "graybox/landscape.hpp"
#include "graybox/rng.hpp"

namespace graybox {

// First-improvement hill climber over the Hamming-1 neighborhood with
// incremental score maintenance: flipping a variable re-evaluates only the
// subfunctions containing it. One instance per worker; climbs reuse buffers.
class HillClimber {
  public:
    explicit HillClimber(const MkLandscape& landscape);

    // Repeatedly applies the first strictly improving flip, scanning a random
    // permutation fixed for this climb (re-scanned from the start after every
    // accepted move). Returns a local optimum.
    Solution climb(const Solution& start, Rng& rng);

    // Fitness of the last returned local optimum.
    std::int64_t last_fitness() const { return fitness_; }

  private:
    void flip_and_update(Solution& s, int v);

    const MkLandscape* landscape_;
    std::vector<std::vector<int>> touching_; // variable -> subfunction indices
    std::vector<std::int64_t> score_;        // fitness delta of flipping each variable
    std::vector<int> perm_;
    std::vector<int> pos_in_perm_;
    std::set<int> improving_;                // permutation positions with positive score
    std::int64_t fitness_ = 0;
};

// Flips exactly max(1, round(alpha * n)) distinct uniformly chosen positions.
Solution perturb(const Solution& s, double alpha, Rng& rng);

} // namespace graybox
