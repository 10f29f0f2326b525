#pragma once

#include "graybox/search.hpp"
#include "graybox/vig.hpp"

namespace graybox {

struct IdpxConfig {
    int beta = 5;
    std::uint64_t max_table_entries = std::uint64_t{1} << 26;
    double time_limit_s = 60.0;
    std::uint64_t max_iterations = 0; // 0 = until the time limit; set for bit-reproducible runs
    std::uint64_t seed = 0;
};

// Iterated DPX: repeatedly recombine a fresh random solution with its
// complement, keeping the best offspring. Budget errors discard the pair.
SearchResult idpx(const MkLandscape& landscape, const Vig& vig, const IdpxConfig& config);

} // namespace graybox
