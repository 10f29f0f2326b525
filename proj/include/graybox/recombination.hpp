#pragma once

#include <utility>
#include <vector>

#include "graybox/bitvec.hpp"
#include "graybox/vig.hpp"

namespace graybox {

// VIG restricted to the variables where the two parents differ. Nodes are
// re-indexed 0..size()-1; `var(i)` maps back to the original variable.
// Connected components and articulation points are computed on construction.
class RecombinationGraph {
  public:
    RecombinationGraph() = default;

    // Differing variables of (x, y) with the VIG edges among them.
    static RecombinationGraph build(const Vig& vig, const Solution& x, const Solution& y);

    // Arbitrary graph over `n` nodes; nodes double as their own variable ids.
    // Used for operator-level tests and the chordalization property suite.
    static RecombinationGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return static_cast<int>(adj_.size()); }
    int var(int node) const { return differing_[static_cast<std::size_t>(node)]; }
    const std::vector<int>& differing_vars() const { return differing_; }
    // -1 when the variable is common to both parents.
    int node_of(int variable) const { return node_of_[static_cast<std::size_t>(variable)]; }

    std::span<const int> neighbors(int node) const { return adj_[static_cast<std::size_t>(node)]; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    std::size_t edge_count() const;

    int component_count() const { return static_cast<int>(components_.size()); }
    const std::vector<std::vector<int>>& components() const { return components_; }
    int component_of(int node) const { return component_of_[static_cast<std::size_t>(node)]; }

    bool is_articulation(int node) const { return articulation_[static_cast<std::size_t>(node)]; }
    const std::vector<bool>& articulation_mask() const { return articulation_; }
    // Articulation points as original variable ids, ascending.
    std::vector<int> articulation_vars() const;

    // node/edge list dump for inspection; not a stability contract
    void debug_dump(std::ostream& out) const;

  private:
    void analyze();

    std::vector<int> differing_;
    std::vector<int> node_of_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> components_;
    std::vector<int> component_of_;
    std::vector<bool> articulation_;
};

} // namespace graybox
