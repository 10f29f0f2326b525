#pragma once

#include <iosfwd>
#include <vector>

#include "graybox/chordal.hpp"
#include "graybox/landscape.hpp"

namespace graybox {

struct CliqueNode {
    std::vector<int> vars;      // maximal clique, local node ids, ascending
    int parent = -1;            // parent clique index, -1 at component roots
    std::vector<int> children;
    std::vector<int> separator; // vars shared with the parent clique (S_i)
    std::vector<int> residue;   // vars - separator (R_i)
    std::vector<int> subfunctions; // assigned subfunction indices (F_i)
};

// Clique forest of a chordal graph, one tree per connected component.
// Clique indices follow discovery order, so parent < child everywhere and
// iterating by decreasing index visits children before parents.
struct CliqueTree {
    std::vector<CliqueNode> cliques;
    std::vector<int> roots;
    std::vector<std::vector<int>> cliques_of_node; // node -> containing cliques

    bool contains(int clique, int node) const;
    void debug_dump(std::ostream& out) const;
};

CliqueTree build_clique_tree(const ChordalGraph& cg);

// Assigns every subfunction with a nonempty differing-variable set to the
// smallest clique containing that set (ties: lowest clique index).
// Subfunctions whose variables are all common are constant over the dynastic
// potential and stay unassigned.
void assign_subfunctions(const MkLandscape& landscape, const RecombinationGraph& g,
                         CliqueTree& tree);

} // namespace graybox
