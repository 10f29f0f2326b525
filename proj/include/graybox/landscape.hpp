#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graybox/bitvec.hpp"
#include "graybox/errors.hpp"

namespace graybox {

struct Literal {
    int var = 0;
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
};

// One k-bounded term of an Mk Landscape. Either an explicit lookup table over
// its variables (NKQ subfunctions) or a weighted clause (MAX-SAT): the clause
// is worth `weight` when any literal is satisfied and 0 otherwise.
//
// Table indexing: bit j of the table index is the value of vars()[j].
class Subfunction {
  public:
    static Subfunction from_table(std::vector<int> vars, std::vector<std::int64_t> table);
    static Subfunction from_clause(std::vector<Literal> literals, std::int64_t weight);

    std::span<const int> vars() const { return vars_; }
    int arity() const { return static_cast<int>(vars_.size()); }
    bool is_clause() const { return is_clause_; }
    std::int64_t clause_weight() const { return weight_; }
    std::span<const std::int64_t> table() const { return table_; }
    std::span<const Literal> literals() const { return literals_; }

    // bit_at(v) must return the value of variable v.
    template <class BitAt>
    std::int64_t eval(BitAt&& bit_at) const {
        if (is_clause_) {
            for (const Literal& lit : literals_)
                if (bit_at(lit.var) != lit.negated)
                    return weight_;
            return 0;
        }
        std::size_t idx = 0;
        for (std::size_t j = 0; j < vars_.size(); ++j)
            idx |= static_cast<std::size_t>(bit_at(vars_[j]) ? 1 : 0) << j;
        return table_[idx];
    }

  private:
    std::vector<int> vars_;
    std::vector<std::int64_t> table_;
    std::vector<Literal> literals_;
    std::int64_t weight_ = 0;
    bool is_clause_ = false;
};

// A pseudo-Boolean function over n binary variables given as a sum of
// k-bounded subfunctions, evaluated in exact 64-bit integer arithmetic.
// Maximization convention throughout. Immutable once built; evaluation is
// read-only and safe to share across threads.
class MkLandscape {
  public:
    explicit MkLandscape(int n);

    void add(Subfunction sub);

    int n() const { return n_; }
    int subfunction_count() const { return static_cast<int>(subs_.size()); }
    int kmax() const { return kmax_; }
    const Subfunction& subfunction(int l) const { return subs_[static_cast<std::size_t>(l)]; }
    std::span<const Subfunction> subfunctions() const { return subs_; }

    std::int64_t evaluate(const Solution& s) const;
    std::int64_t evaluate_subfunction(int l, const Solution& s) const;

  private:
    void check_length(const Solution& s) const {
        if (static_cast<int>(s.size()) != n_)
            throw ContractViolation("solution length does not match landscape");
    }

    int n_;
    int kmax_ = 0;
    std::vector<Subfunction> subs_;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("fitness accumulation overflowed 64-bit range");
    return r;
}

} // namespace graybox
