#include "graybox/clique_tree.hpp"

#include <algorithm>
#include <ostream>

namespace graybox {

bool CliqueTree::contains(int clique, int node) const {
    const auto& vars = cliques[static_cast<std::size_t>(clique)].vars;
    return std::binary_search(vars.begin(), vars.end(), node);
}

// Clique tree construction over the MCS visit order (Galinier et al. 1995,
// Blair-Peyton form). A running clique grows while each visited node's
// numbered neighborhood keeps growing; when it stops growing, the node opens
// a new clique whose separator is that neighborhood and whose parent is the
// clique of its most recently numbered member.
CliqueTree build_clique_tree(const ChordalGraph& cg) {
    const int n = cg.size();
    CliqueTree tree;
    tree.cliques_of_node.resize(static_cast<std::size_t>(n));
    if (n == 0)
        return tree;

    std::vector<bool> numbered(static_cast<std::size_t>(n), false);
    std::vector<int> clique_of(static_cast<std::size_t>(n), -1);
    int prev_card = -1;
    std::vector<int> nbrs;

    for (const int v : cg.mcs.order) {
        nbrs.clear();
        for (int w : cg.neighbors(v))
            if (numbered[static_cast<std::size_t>(w)])
                nbrs.push_back(w);
        const int card = static_cast<int>(nbrs.size());

        if (card <= prev_card || tree.cliques.empty()) {
            // numbered neighborhoods are cliques exactly when the input is
            // chordal; the pairwise assertion is capped because pipeline input
            // is chordal by construction and large cliques would make the
            // check quadratic in the clique size
            if (nbrs.size() <= 32)
                for (std::size_t a = 0; a < nbrs.size(); ++a)
                    for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                        const auto& adj = cg.adj[static_cast<std::size_t>(nbrs[a])];
                        if (!std::binary_search(adj.begin(), adj.end(), nbrs[b]))
                            throw ContractViolation("clique tree: input graph is not chordal");
                    }
            CliqueNode node;
            node.vars = nbrs;
            node.vars.push_back(v);
            std::sort(node.vars.begin(), node.vars.end());
            node.separator = nbrs;
            std::sort(node.separator.begin(), node.separator.end());
            if (!nbrs.empty()) {
                int latest = nbrs[0]; // most recently numbered = lowest gamma
                for (int w : nbrs)
                    if (cg.mcs.gamma[static_cast<std::size_t>(w)] <
                        cg.mcs.gamma[static_cast<std::size_t>(latest)])
                        latest = w;
                node.parent = clique_of[static_cast<std::size_t>(latest)];
            }
            const int idx = static_cast<int>(tree.cliques.size());
            if (node.parent >= 0)
                tree.cliques[static_cast<std::size_t>(node.parent)].children.push_back(idx);
            else
                tree.roots.push_back(idx);
            tree.cliques.push_back(std::move(node));
        } else {
            auto& vars = tree.cliques.back().vars;
            for (int w : nbrs)
                if (!std::binary_search(vars.begin(), vars.end(), w))
                    throw ContractViolation("clique tree: input graph is not chordal");
            vars.insert(std::upper_bound(vars.begin(), vars.end(), v), v);
        }
        clique_of[static_cast<std::size_t>(v)] = static_cast<int>(tree.cliques.size()) - 1;
        numbered[static_cast<std::size_t>(v)] = true;
        prev_card = card;
    }

    for (std::size_t i = 0; i < tree.cliques.size(); ++i) {
        CliqueNode& c = tree.cliques[i];
        c.residue.clear();
        std::set_difference(c.vars.begin(), c.vars.end(), c.separator.begin(),
                            c.separator.end(), std::back_inserter(c.residue));
        for (int v : c.vars)
            tree.cliques_of_node[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
    return tree;
}

void assign_subfunctions(const MkLandscape& landscape, const RecombinationGraph& g,
                         CliqueTree& tree) {
    for (auto& c : tree.cliques)
        c.subfunctions.clear();
    std::vector<int> diff_nodes;
    for (int l = 0; l < landscape.subfunction_count(); ++l) {
        diff_nodes.clear();
        for (int v : landscape.subfunction(l).vars()) {
            const int node = g.node_of(v);
            if (node >= 0)
                diff_nodes.push_back(node);
        }
        if (diff_nodes.empty())
            continue; // constant over the dynastic potential
        int best = -1;
        for (int c : tree.cliques_of_node[static_cast<std::size_t>(diff_nodes[0])]) {
            bool covers = true;
            for (std::size_t i = 1; i < diff_nodes.size() && covers; ++i)
                covers = tree.contains(c, diff_nodes[i]);
            if (!covers)
                continue;
            if (best < 0 ||
                tree.cliques[static_cast<std::size_t>(c)].vars.size() <
                    tree.cliques[static_cast<std::size_t>(best)].vars.size() ||
                (tree.cliques[static_cast<std::size_t>(c)].vars.size() ==
                     tree.cliques[static_cast<std::size_t>(best)].vars.size() &&
                 c < best))
                best = c;
        }
        if (best < 0)
            throw ContractViolation("subfunction not covered by any clique");
        tree.cliques[static_cast<std::size_t>(best)].subfunctions.push_back(l);
    }
}

void CliqueTree::debug_dump(std::ostream& out) const {
    out << "cliques " << cliques.size() << '\n';
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        const auto& c = cliques[i];
        out << "clique " << i << " parent " << c.parent << " vars";
        for (int v : c.vars)
            out << ' ' << v;
        out << " sep";
        for (int v : c.separator)
            out << ' ' << v;
        out << '\n';
    }
}

} // namespace graybox
