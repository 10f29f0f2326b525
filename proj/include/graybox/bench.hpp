#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graybox/crossover.hpp"
#include "graybox/drils.hpp"
#include "graybox/ea.hpp"
#include "graybox/idpx.hpp"

namespace graybox {

// Crossover micro-benchmark: for each Hamming-distance fraction, `pairs`
// parent pairs are drawn (uniform x, y = x with exactly round(fraction*n)
// distinct bits flipped) and every requested operator is applied to each.
struct ExperimentSpec {
    std::string instance_id;
    std::vector<CrossoverOp> operators;
    int beta = 1;
    std::uint64_t max_table_entries = std::uint64_t{1} << 26;
    std::vector<double> hamming_fractions; // each in (0, 1]
    int pairs = 1000;
    std::uint64_t seed = 0;
    int workers = 1;
};

// One CSV row per crossover application:
//   instance,operator,beta,h,runtime_ns,qir,log2_explored,full_dynastic,
//   fitness_x,fitness_y,fitness_z,error
// Budget errors leave the metric fields empty and set `error`. Everything
// except runtime_ns is a pure function of (spec, seed).
extern const char* const kCrossoverCsvHeader;
void bench_crossover(const MkLandscape& landscape, const Vig& vig, const ExperimentSpec& spec,
                     std::ostream& csv);

enum class Algorithm { Drils, Ea, Idpx };

const char* to_string(Algorithm a);

// Repeated seeded runs of one search algorithm. Run r uses seed base_seed + r.
struct RunSpec {
    std::string instance_id;
    Algorithm algorithm = Algorithm::Drils;
    DrilsConfig drils;
    EaConfig ea;
    IdpxConfig idpx;
    int runs = 10;
    std::uint64_t base_seed = 0;
    std::optional<std::int64_t> fstar; // reference fitness for quality = f/f*
    int workers = 1;
};

// One CSV row per run:
//   instance,algorithm,operator,beta,run,seed,best_fitness,quality,iterations,
//   crossover_budget_errors,error
// `sink` (when set) receives each run's trajectory for serialization.
extern const char* const kRunCsvHeader;
void run_algorithm(const MkLandscape& landscape, const Vig& vig, const RunSpec& spec,
                   std::ostream& csv,
                   const std::function<void(int run, const SearchResult&)>& sink = {});

void write_trajectory(std::ostream& out, const SearchResult& result);

} // namespace graybox
