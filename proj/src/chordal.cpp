#include "graybox/chordal.hpp"

#include <algorithm>
#include <bit>

#include "graybox/rng.hpp"

namespace graybox {

namespace {

McsNumbering mcs_on_adjacency(const std::vector<std::vector<int>>& adj,
                              const McsOptions& options);

} // namespace

McsNumbering maximum_cardinality_search(const RecombinationGraph& g, const McsOptions& options) {
    return mcs_on_adjacency(g.adjacency(), options);
}

namespace {

// One bitset of candidate nodes per numbered-neighbor count. Constant-time
// moves between levels; picking the lowest-index node of a level is a word
// scan, cheap enough at n extrations per search.
class CountBuckets {
  public:
    CountBuckets(int n) : words_((static_cast<std::size_t>(n) + 63) / 64) {}

    void insert(int level, int v) {
        auto& bits = level_bits(level);
        bits[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
        ++sizes_[static_cast<std::size_t>(level)];
    }
    void erase(int level, int v) {
        levels_[static_cast<std::size_t>(level)][static_cast<std::size_t>(v) >> 6] &=
            ~(std::uint64_t{1} << (v & 63));
        --sizes_[static_cast<std::size_t>(level)];
    }
    bool empty(int level) const {
        return static_cast<std::size_t>(level) >= sizes_.size() ||
               sizes_[static_cast<std::size_t>(level)] == 0;
    }
    // k-th lowest member of the level (k = 0 gives the minimum)
    int select(int level, std::size_t k) const {
        const auto& bits = levels_[static_cast<std::size_t>(level)];
        for (std::size_t w = 0; w < bits.size(); ++w) {
            std::uint64_t word = bits[w];
            const std::size_t c = static_cast<std::size_t>(std::popcount(word));
            if (k >= c) {
                k -= c;
                continue;
            }
            while (k--)
                word &= word - 1;
            return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        }
        return -1;
    }
    std::size_t size(int level) const { return sizes_[static_cast<std::size_t>(level)]; }

  private:
    std::vector<std::uint64_t>& level_bits(int level) {
        if (static_cast<std::size_t>(level) >= levels_.size()) {
            levels_.resize(static_cast<std::size_t>(level) + 1);
            sizes_.resize(static_cast<std::size_t>(level) + 1, 0);
        }
        auto& bits = levels_[static_cast<std::size_t>(level)];
        if (bits.empty())
            bits.assign(words_, 0);
        return bits;
    }

    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> levels_;
    std::vector<std::size_t> sizes_;
};

McsNumbering mcs_on_adjacency(const std::vector<std::vector<int>>& adj,
                              const McsOptions& options) {
    const int n = static_cast<int>(adj.size());
    McsNumbering out;
    out.options = options;
    out.gamma.assign(static_cast<std::size_t>(n), 0);
    out.order.reserve(static_cast<std::size_t>(n));
    if (n == 0)
        return out;

    std::optional<Rng> tie_rng;
    if (options.tie_seed)
        tie_rng.emplace(*options.tie_seed);

    CountBuckets buckets(n);
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    std::vector<bool> numbered(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v)
        buckets.insert(0, v);
    int maxcount = 0;

    for (int number = n; number >= 1; --number) {
        while (buckets.empty(maxcount))
            --maxcount;
        int u;
        if (number == n && options.start_node) {
            u = *options.start_node;
            if (u < 0 || u >= n)
                throw ContractViolation("mcs start node out of range");
        } else if (tie_rng) {
            u = buckets.select(maxcount, tie_rng->index(buckets.size(maxcount)));
        } else {
            u = buckets.select(maxcount, 0);
        }
        buckets.erase(count[static_cast<std::size_t>(u)], u);
        numbered[static_cast<std::size_t>(u)] = true;
        out.gamma[static_cast<std::size_t>(u)] = number;
        out.order.push_back(u);
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (numbered[static_cast<std::size_t>(v)])
                continue;
            auto& c = count[static_cast<std::size_t>(v)];
            buckets.erase(c, v);
            ++c;
            buckets.insert(c, v);
            maxcount = std::max(maxcount, c);
        }
    }
    return out;
}

} // namespace

// Tarjan-Yannakakis fill-in: walk nodes in elimination (increasing gamma)
// order; each node's higher-numbered neighborhood is funneled through its
// follower, the higher neighbor with minimum gamma. Missing follower edges
// are exactly the fill-in for this order.
ChordalGraph fill_in(const RecombinationGraph& g, const McsNumbering& mcs) {
    const int n = g.size();
    ChordalGraph out;
    out.adj.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            out.adj[static_cast<std::size_t>(u)].push_back(v);

    // adjacency-of-follower membership via stamping, no hashing
    std::vector<int> stamp(static_cast<std::size_t>(n), -1);
    std::vector<int> higher;
    for (auto it = mcs.order.rbegin(); it != mcs.order.rend(); ++it) {
        const int v = *it;
        higher.clear();
        for (int w : out.adj[static_cast<std::size_t>(v)])
            if (mcs.gamma[static_cast<std::size_t>(w)] > mcs.gamma[static_cast<std::size_t>(v)])
                higher.push_back(w);
        if (higher.size() < 2)
            continue;
        int follower = higher[0];
        for (int w : higher)
            if (mcs.gamma[static_cast<std::size_t>(w)] < mcs.gamma[static_cast<std::size_t>(follower)])
                follower = w;
        for (int w : out.adj[static_cast<std::size_t>(follower)])
            stamp[static_cast<std::size_t>(w)] = v;
        stamp[static_cast<std::size_t>(follower)] = v;
        for (int w : higher) {
            if (w == follower || stamp[static_cast<std::size_t>(w)] == v)
                continue;
            stamp[static_cast<std::size_t>(w)] = v;
            out.adj[static_cast<std::size_t>(follower)].push_back(w);
            out.adj[static_cast<std::size_t>(w)].push_back(follower);
            out.fillin_edges.emplace_back(std::min(follower, w), std::max(follower, w));
        }
    }
    for (auto& nb : out.adj)
        std::sort(nb.begin(), nb.end());
    // the input numbering is a perfect elimination order of the filled graph
    // but not necessarily a max-cardinality order of it; renumber when edges
    // were added so downstream consumers can assume an MCS order
    out.mcs = out.fillin_edges.empty() ? mcs : mcs_on_adjacency(out.adj, mcs.options);
    return out;
}

} // namespace graybox
