#include "graybox/crossover.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "graybox/dpx.hpp"
#include "graybox/recombination.hpp"

namespace graybox {

namespace {

using Clock = std::chrono::steady_clock;

void finish_report(CrossoverReport& r, const MkLandscape& landscape, const Solution& x,
                   const Solution& y, Clock::time_point t0) {
    r.fitness = landscape.evaluate(r.offspring);
    const std::int64_t fx = landscape.evaluate(x);
    const std::int64_t fy = landscape.evaluate(y);
    if (std::max(fx, fy) > 0)
        r.qir = qir(fx, fy, r.fitness);
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
}

struct PxDetail {
    Solution offspring;
    int components = 0;
    // per component: differing variables (original ids), for APX's enumeration
    std::vector<std::vector<int>> component_vars;
};

PxDetail px_detail(const MkLandscape& landscape, const Vig& vig, const Solution& x,
                   const Solution& y, bool collect_components) {
    const RecombinationGraph g = RecombinationGraph::build(vig, x, y);
    const int q = g.component_count();
    std::vector<std::int64_t> score_x(static_cast<std::size_t>(q), 0);
    std::vector<std::int64_t> score_y(static_cast<std::size_t>(q), 0);
    for (const Subfunction& f : landscape.subfunctions()) {
        int comp = -1;
        for (int v : f.vars()) {
            const int node = g.node_of(v);
            if (node >= 0) {
                comp = g.component_of(node);
                break;
            }
        }
        if (comp < 0)
            continue; // constant inside the common hyperplane
        score_x[static_cast<std::size_t>(comp)] = checked_add(
            score_x[static_cast<std::size_t>(comp)],
            f.eval([&](int v) { return x.test(static_cast<std::size_t>(v)); }));
        score_y[static_cast<std::size_t>(comp)] = checked_add(
            score_y[static_cast<std::size_t>(comp)],
            f.eval([&](int v) {
                return g.node_of(v) >= 0 ? y.test(static_cast<std::size_t>(v))
                                         : x.test(static_cast<std::size_t>(v));
            }));
    }
    PxDetail out;
    out.offspring = x;
    out.components = q;
    for (int c = 0; c < q; ++c) {
        if (score_y[static_cast<std::size_t>(c)] > score_x[static_cast<std::size_t>(c)])
            for (int node : g.components()[static_cast<std::size_t>(c)])
                out.offspring.flip(static_cast<std::size_t>(g.var(node)));
    }
    if (collect_components) {
        out.component_vars.resize(static_cast<std::size_t>(q));
        for (int c = 0; c < q; ++c)
            for (int node : g.components()[static_cast<std::size_t>(c)])
                out.component_vars[static_cast<std::size_t>(c)].push_back(g.var(node));
    }
    return out;
}

} // namespace

CrossoverReport uniform_crossover(const MkLandscape& landscape, const Solution& x,
                                  const Solution& y, Rng& rng) {
    if (x.size() != y.size())
        throw ContractViolation("parents differ in length");
    const auto t0 = Clock::now();
    CrossoverReport r;
    r.offspring = x;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.test(i) != y.test(i) && rng.coin())
            r.offspring.flip(i);
    finish_report(r, landscape, x, y, t0);
    return r;
}

CrossoverReport network_crossover(const MkLandscape& landscape, const Vig& vig,
                                  const Solution& x, const Solution& y, Rng& rng) {
    if (x.size() != y.size() || static_cast<int>(x.size()) != vig.n())
        throw ContractViolation("parents differ in length");
    const auto t0 = Clock::now();
    const std::size_t n = x.size();
    const std::size_t quota = n / 2;

    std::vector<bool> selected(n, false), seen(n, false);
    std::vector<int> frontier;
    std::size_t picked = 0;
    while (picked < quota) {
        if (frontier.empty()) {
            // restart from a uniform random unselected variable
            std::size_t v;
            do {
                v = rng.index(n);
            } while (selected[v]);
            seen[v] = true;
            frontier.push_back(static_cast<int>(v));
        }
        const std::size_t slot = rng.index(frontier.size());
        const int v = frontier[slot];
        frontier[slot] = frontier.back();
        frontier.pop_back();
        selected[static_cast<std::size_t>(v)] = true;
        ++picked;
        for (int w : vig.neighbors(v))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                frontier.push_back(w);
            }
    }

    const bool selected_from_x = rng.coin();
    CrossoverReport r;
    r.offspring = Solution(n);
    for (std::size_t i = 0; i < n; ++i) {
        const bool from_x = selected[i] == selected_from_x;
        r.offspring.set(i, from_x ? x.test(i) : y.test(i));
    }
    finish_report(r, landscape, x, y, t0);
    return r;
}

CrossoverReport partition_crossover(const MkLandscape& landscape, const Vig& vig,
                                    const Solution& x, const Solution& y) {
    if (x.size() != y.size())
        throw ContractViolation("parents differ in length");
    const auto t0 = Clock::now();
    PxDetail d = px_detail(landscape, vig, x, y, false);
    CrossoverReport r;
    r.offspring = std::move(d.offspring);
    r.log2_explored = d.components;
    r.full_dynastic = static_cast<std::size_t>(d.components) == x.hamming(y);
    finish_report(r, landscape, x, y, t0);
    return r;
}

CrossoverReport articulation_points_crossover(const MkLandscape& landscape, const Vig& vig,
                                              const Solution& x, const Solution& y,
                                              const ApxOptions& options) {
    if (x.size() != y.size())
        throw ContractViolation("parents differ in length");
    const auto t0 = Clock::now();
    const RecombinationGraph base = RecombinationGraph::build(vig, x, y);
    const std::vector<int> articulation = base.articulation_vars();
    const std::size_t h = base.differing_vars().size();

    // parent pairs in candidate order: (x,y), then per articulation point
    std::vector<std::pair<Solution, Solution>> applications;
    applications.emplace_back(x, y);
    for (int a : articulation) {
        Solution yf = y;
        yf.flip(static_cast<std::size_t>(a));
        applications.emplace_back(x, std::move(yf));
        Solution xf = x;
        xf.flip(static_cast<std::size_t>(a));
        applications.emplace_back(y, std::move(xf));
    }

    const bool enumerate = h <= static_cast<std::size_t>(options.exact_enumeration_max_h);
    std::unordered_set<std::uint64_t> explored; // flip masks relative to x over differing vars
    std::vector<int> bit_of(x.size(), -1);
    if (enumerate)
        for (std::size_t i = 0; i < h; ++i)
            bit_of[static_cast<std::size_t>(base.differing_vars()[i])] = static_cast<int>(i);

    bool enumeration_ok = enumerate;
    std::vector<int> application_components; // q per application, for the upper bound
    CrossoverReport best;
    bool have_best = false;
    std::int64_t best_fitness = 0;

    for (const auto& [px, py] : applications) {
        PxDetail d = px_detail(landscape, vig, px, py, enumeration_ok);
        const std::int64_t f = landscape.evaluate(d.offspring);
        if (!have_best || f > best_fitness) {
            best.offspring = d.offspring;
            best_fitness = f;
            have_best = true;
        }
        application_components.push_back(d.components);
        if (enumeration_ok) {
            const std::uint64_t add = std::uint64_t{1} << d.components;
            if (explored.size() + add > options.max_enumerated) {
                enumeration_ok = false;
                continue;
            }
            // base mask of this application relative to x, over d(x,y) bits
            std::uint64_t base_mask = 0;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (bit_of[i] >= 0 && px.test(i) != x.test(i))
                    base_mask |= std::uint64_t{1} << bit_of[i];
            std::vector<std::uint64_t> comp_masks;
            for (const auto& vars : d.component_vars) {
                std::uint64_t m = 0;
                for (int v : vars)
                    m |= std::uint64_t{1} << bit_of[static_cast<std::size_t>(v)];
                comp_masks.push_back(m);
            }
            for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << d.components); ++choice) {
                std::uint64_t m = base_mask;
                for (int c = 0; c < d.components; ++c)
                    if ((choice >> c) & 1)
                        m ^= comp_masks[static_cast<std::size_t>(c)];
                explored.insert(m);
            }
        }
    }

    if (enumeration_ok) {
        const std::uint64_t count = explored.size();
        std::int64_t l2 = 0;
        while ((std::uint64_t{1} << l2) < count)
            ++l2;
        best.log2_explored = l2; // ceil(log2(count))
        best.full_dynastic = h < 64 && count == (std::uint64_t{1} << h);
    } else {
        // log2 of the per-application sum, computed relative to the largest
        // term so nothing overflows; the true count cannot exceed 2^h
        const int max_q =
            *std::max_element(application_components.begin(), application_components.end());
        double scaled = 0;
        for (int q : application_components)
            scaled += std::exp2(static_cast<double>(q - max_q));
        const double l2 = std::ceil(static_cast<double>(max_q) + std::log2(scaled));
        best.log2_explored =
            std::min<std::int64_t>(static_cast<std::int64_t>(l2), static_cast<std::int64_t>(h));
        best.full_dynastic = false;
        best.log2_is_upper_bound = true;
    }
    finish_report(best, landscape, x, y, t0);
    return best;
}

const char* to_string(CrossoverOp op) {
    switch (op) {
    case CrossoverOp::Ux:
        return "ux";
    case CrossoverOp::Nx:
        return "nx";
    case CrossoverOp::Px:
        return "px";
    case CrossoverOp::Apx:
        return "apx";
    case CrossoverOp::Dpx:
        return "dpx";
    }
    return "?";
}

std::optional<CrossoverOp> crossover_from_string(const std::string& name) {
    if (name == "ux")
        return CrossoverOp::Ux;
    if (name == "nx")
        return CrossoverOp::Nx;
    if (name == "px")
        return CrossoverOp::Px;
    if (name == "apx")
        return CrossoverOp::Apx;
    if (name == "dpx")
        return CrossoverOp::Dpx;
    return std::nullopt;
}

CrossoverReport apply_crossover(const MkLandscape& landscape, const Vig& vig, CrossoverOp op,
                                int beta, std::uint64_t max_table_entries, const Solution& x,
                                const Solution& y, Rng& rng) {
    switch (op) {
    case CrossoverOp::Ux:
        return uniform_crossover(landscape, x, y, rng);
    case CrossoverOp::Nx:
        return network_crossover(landscape, vig, x, y, rng);
    case CrossoverOp::Px:
        return partition_crossover(landscape, vig, x, y);
    case CrossoverOp::Apx:
        return articulation_points_crossover(landscape, vig, x, y);
    case CrossoverOp::Dpx: {
        DpxOptions options;
        options.beta = beta;
        options.max_table_entries = max_table_entries;
        return dpx(landscape, vig, x, y, options);
    }
    }
    throw ContractViolation("unknown crossover operator");
}

} // namespace graybox
