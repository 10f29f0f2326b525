#pragma once

#include <numeric>
#include <vector>

namespace graybox {

// Union-find with union by rank and path compression.
class DisjointSet {
  public:
    explicit DisjointSet(int n) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0), classes_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    // Returns the surviving root; no-op when already joined.
    int unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb)
            return ra;
        if (rank_[static_cast<std::size_t>(ra)] < rank_[static_cast<std::size_t>(rb)])
            std::swap(ra, rb);
        parent_[static_cast<std::size_t>(rb)] = ra;
        if (rank_[static_cast<std::size_t>(ra)] == rank_[static_cast<std::size_t>(rb)])
            ++rank_[static_cast<std::size_t>(ra)];
        --classes_;
        return ra;
    }

    bool same(int a, int b) { return find(a) == find(b); }
    int size() const { return static_cast<int>(parent_.size()); }
    int class_count() const { return classes_; }

  private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    int classes_;
};

} // namespace graybox
