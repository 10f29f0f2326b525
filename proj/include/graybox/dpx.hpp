#pragma once

#include <cstdint>
#include <vector>

#include "graybox/chordal.hpp"
#include "graybox/clique_tree.hpp"
#include "graybox/crossover.hpp"
#include "graybox/disjoint_set.hpp"
#include "graybox/landscape.hpp"
#include "graybox/recombination.hpp"

namespace graybox {

struct DpxOptions {
    // Bound on the number of decision units explored individually per clique
    // set (separator and residue each); the rest of a set is grouped into a
    // single joint decision.
    int beta = 1;
    // Cap on the total number of dynamic-programming table entries. Exceeding
    // it raises BudgetError before any table is filled.
    std::uint64_t max_table_entries = std::uint64_t{1} << 26;
    McsOptions mcs;
};

// One decision unit listed while planning a clique: a disjoint-set class
// restricted to the clique's separator or residue.
struct PlanUnit {
    std::vector<int> members; // class members inside the set, local node ids
    bool contains_articulation = false;
};

struct CliquePlan {
    std::vector<PlanUnit> separator_explored;
    std::vector<PlanUnit> residue_explored;
    std::vector<int> separator_rest; // members (in S_i) of the merged rest group
    std::vector<int> residue_rest;   // members (in R_i) of the merged rest group

    // Enumeration units: the classes intersecting the clique after both
    // phases, one joint binary decision each. Classes touching the separator
    // come first; their residue members are slaved to the separator choice,
    // which is what keeps child-table lookups consistent across cliques.
    struct Decider {
        std::vector<std::uint64_t> mask; // bits over the clique's var slots
        bool touches_separator = false;
        int min_var = 0;
    };
    std::vector<Decider> deciders;
    int separator_deciders = 0;
};

// Which parent-value combinations DPX will enumerate per clique, plus the
// final joint-transmission classes. Built in post-order (children before
// parents, by decreasing clique index).
struct ExplorationPlan {
    int beta = 0;
    DisjointSet classes;
    std::vector<CliquePlan> cliques;
    int class_count = 0;
    bool full_dynastic = false;        // every class is a singleton
    std::uint64_t table_entries = 0;   // sum over cliques of 2^{separator deciders}
    std::uint64_t combinations = 0;    // sum over cliques of 2^{deciders}
};

ExplorationPlan plan_exploration(const CliqueTree& tree, const RecombinationGraph& g, int beta);

struct DpResult {
    Solution offspring;
    std::int64_t value = 0;          // full fitness of the offspring
    std::uint64_t evaluations = 0;   // separator/residue configurations scored
};

// Clique-tree dynamic programming over the plan's configurations. For every
// explored separator configuration w of clique i the best explored residue
// configuration v is chosen by
//     score(w,v) = sum_{f in F_i} f(x ^ w ^ v) + sum_{j in ch(i)} value[j][(w^v) & S_j]
// and the offspring is rebuilt top-down from the stored argmax masks. With a
// full plan this maximizes over the entire dynastic potential.
DpResult dp_offspring(const MkLandscape& landscape, const RecombinationGraph& g,
                      const CliqueTree& tree, const ExplorationPlan& plan, const Solution& x,
                      std::uint64_t max_table_entries);

// Full pipeline: recombination graph, MCS, fill-in, clique tree, subfunction
// assignment, exploration plan, dynamic programming, reconstruction.
CrossoverReport dpx(const MkLandscape& landscape, const Vig& vig, const Solution& x,
                    const Solution& y, const DpxOptions& options = {});

} // namespace graybox
