#include "graybox/vig.hpp"

#include <algorithm>

namespace graybox {

std::size_t Vig::edge_count() const {
    std::size_t deg = 0;
    for (const auto& a : adj_)
        deg += a.size();
    return deg / 2;
}

std::vector<std::pair<int, int>> Vig::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Vig build_vig(const MkLandscape& landscape) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(landscape.n()));
    for (const Subfunction& f : landscape.subfunctions()) {
        const auto vars = f.vars();
        for (std::size_t a = 0; a < vars.size(); ++a)
            for (std::size_t b = a + 1; b < vars.size(); ++b) {
                adj[static_cast<std::size_t>(vars[a])].push_back(vars[b]);
                adj[static_cast<std::size_t>(vars[b])].push_back(vars[a]);
            }
    }
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return Vig(landscape.n(), std::move(adj));
}

} // namespace graybox
