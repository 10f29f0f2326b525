#pragma once

// Shared test instances, including the hand-analyzed reference graphs.

#include <utility>
#include <vector>

#include "graybox/landscape.hpp"
#include "graybox/rng.hpp"

namespace fixtures {

using graybox::MkLandscape;
using graybox::Rng;
using graybox::Solution;
using graybox::Subfunction;

inline Subfunction random_table_sub(std::vector<int> vars, Rng& rng, std::int64_t lo = 0,
                                    std::int64_t hi = 63) {
    std::vector<std::int64_t> table(std::size_t{1} << vars.size());
    for (auto& t : table)
        t = lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    return Subfunction::from_table(std::move(vars), std::move(table));
}

// The 18-variable, k = 3 sample function: fixed subfunction structure, table
// values drawn from the seed.
inline MkLandscape sample18(std::uint64_t seed = 99) {
    const std::vector<std::vector<int>> structure = {
        {0, 6, 14},   {1, 0, 6},    {2, 1, 6},    {3, 7, 13},   {4, 1, 14},   {5, 4, 2},
        {6, 10, 13},  {7, 12, 15},  {8, 3, 6},    {9, 11, 14},  {10, 2, 17},  {11, 16, 17},
        {12, 10, 17}, {13, 12, 15}, {14, 4, 16},  {15, 7, 13},  {16, 9, 11},  {17, 5, 2}};
    Rng rng(seed);
    MkLandscape f(18);
    for (const auto& vars : structure)
        f.add(random_table_sub(vars, rng));
    return f;
}

// Interaction edges of the sample function (42 undirected pairs).
inline std::vector<std::pair<int, int>> sample18_edges() {
    return {{0, 1},   {0, 6},   {0, 14},  {1, 2},   {1, 4},   {1, 6},   {1, 14},
            {2, 4},   {2, 5},   {2, 6},   {2, 10},  {2, 17},  {3, 6},   {3, 7},
            {3, 8},   {3, 13},  {4, 5},   {4, 14},  {4, 16},  {5, 17},  {6, 8},
            {6, 10},  {6, 13},  {6, 14},  {7, 12},  {7, 13},  {7, 15},  {9, 11},
            {9, 14},  {9, 16},  {10, 12}, {10, 13}, {10, 17}, {11, 14}, {11, 16},
            {11, 17}, {12, 13}, {12, 15}, {12, 17}, {13, 15}, {14, 16}, {16, 17}};
}

// The two parents recombined in the worked example.
inline std::pair<Solution, Solution> sample18_parents() {
    Solution red(18), blue(18);
    const char* bits = "111101011101110110";
    for (int i = 0; i < 18; ++i)
        blue.set(static_cast<std::size_t>(i), bits[i] == '1');
    return {red, blue};
}

// Triangle {0,1,2} with pendants 3-0, 4-1, 5-2: the pathological component
// where all three triangle vertices are articulation points. Labels are
// chosen so the default lowest-index tie-break discovers the triangle clique
// first, rooting the clique tree at the triangle with three leaf cliques.
inline MkLandscape pendant_triangle(std::uint64_t seed = 7) {
    Rng rng(seed);
    MkLandscape f(6);
    const std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2},
                                                    {0, 3}, {1, 4}, {2, 5}};
    for (auto [u, v] : edges)
        f.add(random_table_sub({u, v}, rng));
    return f;
}

// Path 0-1-...-(len-1) with one arity-2 subfunction per edge.
inline MkLandscape path_landscape(int len, std::uint64_t seed = 5) {
    Rng rng(seed);
    MkLandscape f(len);
    for (int i = 0; i + 1 < len; ++i)
        f.add(random_table_sub({i, i + 1}, rng));
    return f;
}

// One arity-2 random-table subfunction per edge.
inline MkLandscape edge_landscape(int n, const std::vector<std::pair<int, int>>& edges,
                                  std::uint64_t seed = 11) {
    Rng rng(seed);
    MkLandscape f(n);
    for (auto [u, v] : edges)
        f.add(random_table_sub({u, v}, rng));
    return f;
}

} // namespace fixtures
