#include "graybox/landscape.hpp"

#include <algorithm>

namespace graybox {

namespace {

void check_vars_distinct(std::span<const int> vars) {
    if (vars.empty())
        throw ContractViolation("subfunction arity must be at least 1");
    std::vector<int> sorted(vars.begin(), vars.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ContractViolation("subfunction variables must be distinct");
    if (sorted.front() < 0)
        throw ContractViolation("negative variable index");
}

} // namespace

Subfunction Subfunction::from_table(std::vector<int> vars, std::vector<std::int64_t> table) {
    check_vars_distinct(vars);
    if (vars.size() >= 63)
        throw ContractViolation("table subfunction arity too large");
    if (table.size() != (std::size_t{1} << vars.size()))
        throw ContractViolation("table size must be 2^arity");
    Subfunction f;
    f.vars_ = std::move(vars);
    f.table_ = std::move(table);
    return f;
}

Subfunction Subfunction::from_clause(std::vector<Literal> literals, std::int64_t weight) {
    if (weight < 0)
        throw ContractViolation("clause weight must be non-negative");
    std::vector<int> vars;
    vars.reserve(literals.size());
    for (const Literal& lit : literals)
        vars.push_back(lit.var);
    check_vars_distinct(vars);
    Subfunction f;
    f.vars_ = std::move(vars);
    f.literals_ = std::move(literals);
    f.weight_ = weight;
    f.is_clause_ = true;
    return f;
}

MkLandscape::MkLandscape(int n) : n_(n) {
    if (n <= 0)
        throw ContractViolation("landscape needs at least one variable");
}

void MkLandscape::add(Subfunction sub) {
    for (int v : sub.vars())
        if (v >= n_)
            throw ContractViolation("subfunction variable out of range");
    kmax_ = std::max(kmax_, sub.arity());
    subs_.push_back(std::move(sub));
}

std::int64_t MkLandscape::evaluate(const Solution& s) const {
    check_length(s);
    std::int64_t total = 0;
    for (const Subfunction& f : subs_)
        total = checked_add(total, f.eval([&](int v) { return s.test(static_cast<std::size_t>(v)); }));
    return total;
}

std::int64_t MkLandscape::evaluate_subfunction(int l, const Solution& s) const {
    if (l < 0 || l >= subfunction_count())
        throw ContractViolation("subfunction index out of range");
    check_length(s);
    return subs_[static_cast<std::size_t>(l)].eval(
        [&](int v) { return s.test(static_cast<std::size_t>(v)); });
}

} // namespace graybox
