#include "graybox/dpx.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

namespace graybox {

namespace {

using SlotMask = std::vector<std::uint64_t>;

SlotMask make_mask(std::size_t bits) { return SlotMask((bits + 63) / 64, 0); }

void set_bit(SlotMask& m, int i) { m[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }

bool test_bit(const SlotMask& m, int i) {
    return (m[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
}

void or_into(SlotMask& dst, const SlotMask& src) {
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] |= src[i];
}

struct MaskHash {
    std::size_t operator()(const SlotMask& m) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint64_t w : m) {
            h ^= w;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

std::uint64_t saturating_shl1(int bits) {
    return bits >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits);
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > ~b ? ~std::uint64_t{0} : a + b;
}

} // namespace

ExplorationPlan plan_exploration(const CliqueTree& tree, const RecombinationGraph& g, int beta) {
    if (beta < 0)
        throw ContractViolation("beta must be non-negative");
    const int n = g.size();
    ExplorationPlan plan{beta, DisjointSet(n), {}, 0, false, 0, 0};
    plan.cliques.resize(tree.cliques.size());

    // per-root aggregates so units can be ordered without enumerating classes
    std::vector<int> min_var(static_cast<std::size_t>(n));
    std::vector<bool> has_articulation(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        min_var[static_cast<std::size_t>(i)] = i;
        has_articulation[static_cast<std::size_t>(i)] = g.is_articulation(i);
    }

    struct UnitRef {
        int root;
        bool articulation;
        int min_var;
    };
    std::vector<UnitRef> units;
    std::vector<int> roots_seen;

    auto run_phase = [&](const std::vector<int>& set_vars, std::vector<PlanUnit>& explored,
                         std::vector<int>& rest) {
        units.clear();
        roots_seen.clear();
        for (int v : set_vars) {
            const int r = plan.classes.find(v);
            if (std::find(roots_seen.begin(), roots_seen.end(), r) == roots_seen.end()) {
                roots_seen.push_back(r);
                units.push_back(UnitRef{r, has_articulation[static_cast<std::size_t>(r)],
                                        min_var[static_cast<std::size_t>(r)]});
            }
        }
        std::sort(units.begin(), units.end(), [](const UnitRef& a, const UnitRef& b) {
            if (a.articulation != b.articulation)
                return a.articulation;
            return a.min_var < b.min_var;
        });
        auto members_in_set = [&](int root) {
            PlanUnit u;
            u.contains_articulation = has_articulation[static_cast<std::size_t>(root)];
            for (int v : set_vars)
                if (plan.classes.find(v) == root)
                    u.members.push_back(v);
            return u;
        };
        const std::size_t explored_count = std::min<std::size_t>(units.size(), static_cast<std::size_t>(beta));
        for (std::size_t i = 0; i < explored_count; ++i)
            explored.push_back(members_in_set(units[i].root));
        if (explored_count < units.size()) {
            int merged = units[explored_count].root;
            for (std::size_t i = explored_count + 1; i < units.size(); ++i) {
                const int other = units[i].root;
                const int survivor = plan.classes.unite(merged, other);
                min_var[static_cast<std::size_t>(survivor)] =
                    std::min(min_var[static_cast<std::size_t>(merged)],
                             min_var[static_cast<std::size_t>(other)]);
                has_articulation[static_cast<std::size_t>(survivor)] =
                    has_articulation[static_cast<std::size_t>(merged)] ||
                    has_articulation[static_cast<std::size_t>(other)];
                merged = survivor;
            }
            PlanUnit u = members_in_set(merged);
            rest = std::move(u.members);
        }
    };

    for (int ci = static_cast<int>(tree.cliques.size()) - 1; ci >= 0; --ci) {
        const CliqueNode& clique = tree.cliques[static_cast<std::size_t>(ci)];
        CliquePlan& cp = plan.cliques[static_cast<std::size_t>(ci)];
        run_phase(clique.separator, cp.separator_explored, cp.separator_rest);
        run_phase(clique.residue, cp.residue_explored, cp.residue_rest);

        // snapshot the enumeration units: current classes restricted to the clique
        const std::size_t width = clique.vars.size();
        std::vector<int> group_roots;
        for (std::size_t slot = 0; slot < width; ++slot) {
            const int v = clique.vars[slot];
            const int r = plan.classes.find(v);
            auto it = std::find(group_roots.begin(), group_roots.end(), r);
            std::size_t gi;
            if (it == group_roots.end()) {
                gi = group_roots.size();
                group_roots.push_back(r);
                CliquePlan::Decider d;
                d.mask = make_mask(width);
                d.min_var = v;
                cp.deciders.push_back(std::move(d));
            } else {
                gi = static_cast<std::size_t>(it - group_roots.begin());
            }
            set_bit(cp.deciders[gi].mask, static_cast<int>(slot));
            if (std::binary_search(clique.separator.begin(), clique.separator.end(), v))
                cp.deciders[gi].touches_separator = true;
        }
        std::sort(cp.deciders.begin(), cp.deciders.end(),
                  [](const CliquePlan::Decider& a, const CliquePlan::Decider& b) {
                      if (a.touches_separator != b.touches_separator)
                          return a.touches_separator;
                      return a.min_var < b.min_var;
                  });
        for (const auto& d : cp.deciders)
            if (d.touches_separator)
                ++cp.separator_deciders;
        plan.table_entries =
            saturating_add(plan.table_entries, saturating_shl1(cp.separator_deciders));
        plan.combinations =
            saturating_add(plan.combinations, saturating_shl1(static_cast<int>(cp.deciders.size())));
    }

    plan.class_count = plan.classes.class_count();
    plan.full_dynastic = plan.class_count == n;
    return plan;
}

namespace {

// Everything the inner loop needs about one subfunction assigned to a clique.
struct PreparedSubfunction {
    const Subfunction* f;
    std::size_t base_index = 0;                   // table index under parent x
    std::vector<std::pair<int, int>> flip_slots;  // (table bit, clique slot)
    // clause form:
    std::vector<std::pair<int, int>> lit_slots;   // (literal idx, clique slot), differing lits
    bool common_satisfied = false;                // some literal on a common var is true under x
    std::vector<bool> lit_sat_x;                  // literal truth under x, differing lits only
};

struct CliqueTables {
    std::unordered_map<SlotMask, std::pair<std::int64_t, SlotMask>, MaskHash> best;
};

} // namespace

DpResult dp_offspring(const MkLandscape& landscape, const RecombinationGraph& g,
                      const CliqueTree& tree, const ExplorationPlan& plan, const Solution& x,
                      std::uint64_t max_table_entries) {
    if (plan.table_entries > max_table_entries)
        throw BudgetError("dpx table budget exceeded: needs " +
                          std::to_string(plan.table_entries) + " entries, cap " +
                          std::to_string(max_table_entries));
    DpResult result;
    const std::size_t clique_count = tree.cliques.size();
    std::vector<CliqueTables> tables(clique_count);
    std::vector<int> slot_of(static_cast<std::size_t>(g.size()), -1);

    for (int ci = static_cast<int>(clique_count) - 1; ci >= 0; --ci) {
        const CliqueNode& clique = tree.cliques[static_cast<std::size_t>(ci)];
        const CliquePlan& cp = plan.cliques[static_cast<std::size_t>(ci)];
        const std::size_t width = clique.vars.size();
        for (std::size_t s = 0; s < width; ++s)
            slot_of[static_cast<std::size_t>(clique.vars[s])] = static_cast<int>(s);

        // separator slots ascending by variable (canonical key order)
        std::vector<int> sep_slots;
        for (int v : clique.separator)
            sep_slots.push_back(slot_of[static_cast<std::size_t>(v)]);
        SlotMask residue_mask = make_mask(width);
        for (int v : clique.residue)
            set_bit(residue_mask, slot_of[static_cast<std::size_t>(v)]);

        // children's separator slots within this clique, in the child's key order
        std::vector<std::vector<int>> child_slots;
        for (int child : clique.children) {
            std::vector<int> cs;
            for (int v : tree.cliques[static_cast<std::size_t>(child)].separator) {
                const int s = slot_of[static_cast<std::size_t>(v)];
                if (s < 0)
                    throw ContractViolation("child separator var missing from parent clique");
                cs.push_back(s);
            }
            child_slots.push_back(std::move(cs));
        }

        std::vector<PreparedSubfunction> prepared;
        for (int l : clique.subfunctions) {
            PreparedSubfunction p;
            p.f = &landscape.subfunction(l);
            if (p.f->is_clause()) {
                const auto lits = p.f->literals();
                for (std::size_t li = 0; li < lits.size(); ++li) {
                    const bool sat = x.test(static_cast<std::size_t>(lits[li].var)) != lits[li].negated;
                    const int node = g.node_of(lits[li].var);
                    if (node < 0) {
                        p.common_satisfied = p.common_satisfied || sat;
                    } else {
                        p.lit_slots.emplace_back(static_cast<int>(li),
                                                 slot_of[static_cast<std::size_t>(node)]);
                        p.lit_sat_x.push_back(sat);
                    }
                }
            } else {
                const auto vars = p.f->vars();
                for (std::size_t j = 0; j < vars.size(); ++j) {
                    if (x.test(static_cast<std::size_t>(vars[j])))
                        p.base_index |= std::size_t{1} << j;
                    const int node = g.node_of(vars[j]);
                    if (node >= 0)
                        p.flip_slots.emplace_back(static_cast<int>(j),
                                                  slot_of[static_cast<std::size_t>(node)]);
                }
            }
            for (const auto& [bit, slot] : p.flip_slots)
                if (slot < 0)
                    throw ContractViolation("assigned subfunction var outside clique");
            for (const auto& [li, slot] : p.lit_slots)
                if (slot < 0)
                    throw ContractViolation("assigned subfunction var outside clique");
            prepared.push_back(std::move(p));
        }

        const int d = static_cast<int>(cp.deciders.size());
        if (d >= 63)
            throw BudgetError("dpx: too many decision units in one clique");
        SlotMask combo = make_mask(width);
        SlotMask key, vmask;
        auto& table = tables[static_cast<std::size_t>(ci)].best;
        for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << d); ++sigma) {
            std::fill(combo.begin(), combo.end(), 0);
            for (int b = 0; b < d; ++b)
                if ((sigma >> b) & 1)
                    or_into(combo, cp.deciders[static_cast<std::size_t>(b)].mask);

            std::int64_t score = 0;
            for (const PreparedSubfunction& p : prepared) {
                if (p.f->is_clause()) {
                    bool sat = p.common_satisfied;
                    for (std::size_t li = 0; !sat && li < p.lit_slots.size(); ++li)
                        sat = p.lit_sat_x[li] != test_bit(combo, p.lit_slots[li].second);
                    if (sat)
                        score = checked_add(score, p.f->clause_weight());
                } else {
                    std::size_t idx = p.base_index;
                    for (const auto& [bit, slot] : p.flip_slots)
                        if (test_bit(combo, slot))
                            idx ^= std::size_t{1} << bit;
                    score = checked_add(score, p.f->table()[idx]);
                }
            }
            for (std::size_t c = 0; c < child_slots.size(); ++c) {
                key.assign((child_slots[c].size() + 63) / 64, 0);
                for (std::size_t t = 0; t < child_slots[c].size(); ++t)
                    if (test_bit(combo, child_slots[c][t]))
                        key[t >> 6] |= std::uint64_t{1} << (t & 63);
                const auto& child_table =
                    tables[static_cast<std::size_t>(clique.children[c])].best;
                auto it = child_table.find(key);
                if (it == child_table.end())
                    throw ContractViolation("dp: child table has no entry for separator mask");
                score = checked_add(score, it->second.first);
            }
            ++result.evaluations;

            key.assign((sep_slots.size() + 63) / 64, 0);
            for (std::size_t t = 0; t < sep_slots.size(); ++t)
                if (test_bit(combo, sep_slots[t]))
                    key[t >> 6] |= std::uint64_t{1} << (t & 63);
            vmask = combo;
            for (std::size_t w = 0; w < vmask.size(); ++w)
                vmask[w] &= residue_mask[w];
            auto [it, inserted] = table.try_emplace(key, score, vmask);
            if (!inserted && score > it->second.first)
                it->second = {score, vmask};
        }

        for (int v : clique.vars)
            slot_of[static_cast<std::size_t>(v)] = -1;
    }

    // top-down reconstruction: parents always precede children in index order
    BitVec flips(static_cast<std::size_t>(g.size()));
    SlotMask key;
    for (std::size_t ci = 0; ci < clique_count; ++ci) {
        const CliqueNode& clique = tree.cliques[ci];
        key.assign((clique.separator.size() + 63) / 64, 0);
        for (std::size_t t = 0; t < clique.separator.size(); ++t)
            if (flips.test(static_cast<std::size_t>(clique.separator[t])))
                key[t >> 6] |= std::uint64_t{1} << (t & 63);
        const auto it = tables[ci].best.find(key);
        if (it == tables[ci].best.end())
            throw ContractViolation("dp: reconstruction key missing");
        const SlotMask& vmask = it->second.second;
        for (std::size_t s = 0; s < clique.vars.size(); ++s)
            if (test_bit(vmask, static_cast<int>(s)))
                flips.set(static_cast<std::size_t>(clique.vars[s]), true);
    }

    result.offspring = x;
    flips.for_each_set([&](std::size_t node) {
        result.offspring.flip(static_cast<std::size_t>(g.var(static_cast<int>(node))));
    });
    result.value = landscape.evaluate(result.offspring);
    return result;
}

CrossoverReport dpx(const MkLandscape& landscape, const Vig& vig, const Solution& x,
                    const Solution& y, const DpxOptions& options) {
    if (x.size() != y.size())
        throw ContractViolation("parents differ in length");
    const auto t0 = std::chrono::steady_clock::now();
    const RecombinationGraph g = RecombinationGraph::build(vig, x, y);

    CrossoverReport report;
    if (g.size() == 0) {
        report.offspring = x;
        report.log2_explored = 0;
        report.full_dynastic = true;
    } else {
        const McsNumbering mcs = maximum_cardinality_search(g, options.mcs);
        const ChordalGraph chordal = fill_in(g, mcs);
        CliqueTree tree = build_clique_tree(chordal);
        assign_subfunctions(landscape, g, tree);
        const ExplorationPlan plan = plan_exploration(tree, g, options.beta);
        DpResult dp = dp_offspring(landscape, g, tree, plan, x, options.max_table_entries);
        report.offspring = std::move(dp.offspring);
        report.log2_explored = plan.class_count;
        report.full_dynastic = plan.full_dynastic;
    }
    const std::int64_t fx = landscape.evaluate(x);
    const std::int64_t fy = landscape.evaluate(y);
    report.fitness = landscape.evaluate(report.offspring);
    if (std::max(fx, fy) > 0)
        report.qir = qir(fx, fy, report.fitness);
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - t0);
    return report;
}

} // namespace graybox
