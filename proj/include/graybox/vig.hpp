#pragma once

#include <utility>
#include <vector>

#include "graybox/landscape.hpp"

namespace graybox {

// Variable interaction graph built as the co-occurrence graph: i and j are
// adjacent exactly when some subfunction contains both. Immutable.
class Vig {
  public:
    Vig(int n, std::vector<std::vector<int>> adjacency)
        : n_(n), adj_(std::move(adjacency)) {}

    int n() const { return n_; }
    std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

  private:
    int n_;
    std::vector<std::vector<int>> adj_; // sorted, symmetric, no self-loops
};

Vig build_vig(const MkLandscape& landscape);

} // namespace graybox
