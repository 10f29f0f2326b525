#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graybox/recombination.hpp"

namespace graybox {

struct McsOptions {
    // Force the first numbered node (used by tests that pin the search start).
    // Later components start at their lowest-index node as usual.
    std::optional<int> start_node;
    // Break count ties uniformly at random instead of lowest-index-first.
    std::optional<std::uint64_t> tie_seed;
};

// Maximum cardinality search numbering: nodes numbered |V|..1, each step
// picking the unnumbered node with the most numbered neighbors. On a chordal
// graph the increasing-gamma order is a perfect elimination order.
struct McsNumbering {
    std::vector<int> gamma; // node -> number in [1, |V|]
    std::vector<int> order; // visit order; order[0] has gamma == |V|
    McsOptions options;     // how the numbering was produced
};

McsNumbering maximum_cardinality_search(const RecombinationGraph& g,
                                        const McsOptions& options = {});

// Chordal supergraph of a recombination graph: original edges plus the
// fill-in edges demanded by the MCS numbering. When edges were added, `mcs`
// is recomputed on the chordal result (with the numbering's original
// options) so that it is a maximum cardinality order of the graph carried
// here; the clique tree construction depends on that. A second fill-in pass
// over the result adds nothing.
struct ChordalGraph {
    std::vector<std::vector<int>> adj; // sorted adjacency incl. fill-in edges
    std::vector<std::pair<int, int>> fillin_edges;
    McsNumbering mcs;

    int size() const { return static_cast<int>(adj.size()); }
    std::span<const int> neighbors(int v) const { return adj[static_cast<std::size_t>(v)]; }
};

ChordalGraph fill_in(const RecombinationGraph& g, const McsNumbering& mcs);

} // namespace graybox
