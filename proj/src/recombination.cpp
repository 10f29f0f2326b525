#include "graybox/recombination.hpp"

#include <algorithm>
#include <ostream>

namespace graybox {

RecombinationGraph RecombinationGraph::build(const Vig& vig, const Solution& x,
                                             const Solution& y) {
    if (x.size() != y.size() || static_cast<int>(x.size()) != vig.n())
        throw ContractViolation("parents must match the interaction graph size");
    RecombinationGraph g;
    const int n = vig.n();
    g.node_of_.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (x.test(static_cast<std::size_t>(v)) != y.test(static_cast<std::size_t>(v))) {
            g.node_of_[static_cast<std::size_t>(v)] = static_cast<int>(g.differing_.size());
            g.differing_.push_back(v);
        }
    }
    g.adj_.resize(g.differing_.size());
    for (std::size_t i = 0; i < g.differing_.size(); ++i) {
        for (int nb : vig.neighbors(g.differing_[i])) {
            const int j = g.node_of_[static_cast<std::size_t>(nb)];
            if (j >= 0)
                g.adj_[i].push_back(j);
        }
        std::sort(g.adj_[i].begin(), g.adj_[i].end());
    }
    g.analyze();
    return g;
}

RecombinationGraph RecombinationGraph::from_edges(int n,
                                                  const std::vector<std::pair<int, int>>& edges) {
    RecombinationGraph g;
    g.differing_.resize(static_cast<std::size_t>(n));
    g.node_of_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        g.differing_[static_cast<std::size_t>(i)] = i;
        g.node_of_[static_cast<std::size_t>(i)] = i;
    }
    g.adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u == v || u < 0 || v < 0 || u >= n || v >= n)
            throw ContractViolation("bad edge");
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    g.analyze();
    return g;
}

std::size_t RecombinationGraph::edge_count() const {
    std::size_t deg = 0;
    for (const auto& a : adj_)
        deg += a.size();
    return deg / 2;
}

std::vector<int> RecombinationGraph::articulation_vars() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (articulation_[static_cast<std::size_t>(i)])
            out.push_back(var(i));
    std::sort(out.begin(), out.end());
    return out;
}

// Components by traversal plus articulation points by an iterative
// lowpoint depth-first search (Hopcroft-Tarjan).
void RecombinationGraph::analyze() {
    const int n = size();
    component_of_.assign(static_cast<std::size_t>(n), -1);
    components_.clear();
    articulation_.assign(static_cast<std::size_t>(n), false);

    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::size_t> next_edge(static_cast<std::size_t>(n), 0);
    int timer = 0;

    for (int start = 0; start < n; ++start) {
        if (disc[static_cast<std::size_t>(start)] != -1)
            continue;
        const int comp = static_cast<int>(components_.size());
        components_.emplace_back();
        int root_children = 0;

        std::vector<int> stack{start};
        disc[static_cast<std::size_t>(start)] = low[static_cast<std::size_t>(start)] = timer++;
        while (!stack.empty()) {
            const int u = stack.back();
            if (next_edge[static_cast<std::size_t>(u)] == 0) {
                component_of_[static_cast<std::size_t>(u)] = comp;
                components_[static_cast<std::size_t>(comp)].push_back(u);
            }
            if (next_edge[static_cast<std::size_t>(u)] < adj_[static_cast<std::size_t>(u)].size()) {
                const int v = adj_[static_cast<std::size_t>(u)][next_edge[static_cast<std::size_t>(u)]++];
                if (disc[static_cast<std::size_t>(v)] == -1) {
                    parent[static_cast<std::size_t>(v)] = u;
                    if (u == start)
                        ++root_children;
                    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
                    stack.push_back(v);
                } else if (v != parent[static_cast<std::size_t>(u)]) {
                    low[static_cast<std::size_t>(u)] =
                        std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
                }
            } else {
                stack.pop_back();
                const int p = parent[static_cast<std::size_t>(u)];
                if (p != -1) {
                    low[static_cast<std::size_t>(p)] =
                        std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(u)]);
                    if (p != start && low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(p)])
                        articulation_[static_cast<std::size_t>(p)] = true;
                }
            }
        }
        if (root_children > 1)
            articulation_[static_cast<std::size_t>(start)] = true;
        std::sort(components_[static_cast<std::size_t>(comp)].begin(),
                  components_[static_cast<std::size_t>(comp)].end());
    }
}

void RecombinationGraph::debug_dump(std::ostream& out) const {
    out << "nodes " << size() << '\n';
    for (int i = 0; i < size(); ++i)
        out << "n " << i << " var " << var(i) << (is_articulation(i) ? " articulation" : "")
            << '\n';
    for (int i = 0; i < size(); ++i)
        for (int j : neighbors(i))
            if (i < j)
                out << "e " << i << ' ' << j << '\n';
}

} // namespace graybox
