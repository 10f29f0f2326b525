#include "graybox/hill_climber.hpp"

#include <algorithm>
#include <cmath>

namespace graybox {

HillClimber::HillClimber(const MkLandscape& landscape) : landscape_(&landscape) {
    const std::size_t n = static_cast<std::size_t>(landscape.n());
    touching_.resize(n);
    for (int l = 0; l < landscape.subfunction_count(); ++l)
        for (int v : landscape.subfunction(l).vars())
            touching_[static_cast<std::size_t>(v)].push_back(l);
    score_.resize(n);
    perm_.resize(n);
    pos_in_perm_.resize(n);
}

Solution HillClimber::climb(const Solution& start, Rng& rng) {
    const int n = landscape_->n();
    Solution s = start;
    fitness_ = landscape_->evaluate(s);

    auto bit = [&](int v) { return s.test(static_cast<std::size_t>(v)); };
    for (int v = 0; v < n; ++v) {
        std::int64_t delta = 0;
        for (int l : touching_[static_cast<std::size_t>(v)]) {
            const Subfunction& f = landscape_->subfunction(l);
            delta += f.eval([&](int u) { return u == v ? !bit(u) : bit(u); }) - f.eval(bit);
        }
        score_[static_cast<std::size_t>(v)] = delta;
    }

    for (int i = 0; i < n; ++i)
        perm_[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm_[static_cast<std::size_t>(i)],
                  perm_[rng.index(static_cast<std::size_t>(i) + 1)]);
    for (int i = 0; i < n; ++i)
        pos_in_perm_[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] = i;

    improving_.clear();
    for (int v = 0; v < n; ++v)
        if (score_[static_cast<std::size_t>(v)] > 0)
            improving_.insert(pos_in_perm_[static_cast<std::size_t>(v)]);

    while (!improving_.empty()) {
        const int v = perm_[static_cast<std::size_t>(*improving_.begin())];
        fitness_ += score_[static_cast<std::size_t>(v)];
        flip_and_update(s, v);
    }
    return s;
}

void HillClimber::flip_and_update(Solution& s, int v) {
    auto old_bit = [&](int u) { return s.test(static_cast<std::size_t>(u)); };
    auto new_bit = [&](int u) { return u == v ? !old_bit(u) : old_bit(u); };

    for (int l : touching_[static_cast<std::size_t>(v)]) {
        const Subfunction& f = landscape_->subfunction(l);
        const std::int64_t old_val = f.eval(old_bit);
        const std::int64_t new_val = f.eval(new_bit);
        for (int j : f.vars()) {
            const std::int64_t old_flip =
                f.eval([&](int u) { return u == j ? !old_bit(u) : old_bit(u); });
            const std::int64_t new_flip =
                f.eval([&](int u) { return u == j ? !new_bit(u) : new_bit(u); });
            auto& sc = score_[static_cast<std::size_t>(j)];
            const bool was_improving = sc > 0;
            sc += (new_flip - new_val) - (old_flip - old_val);
            const bool now_improving = sc > 0;
            if (was_improving != now_improving) {
                if (now_improving)
                    improving_.insert(pos_in_perm_[static_cast<std::size_t>(j)]);
                else
                    improving_.erase(pos_in_perm_[static_cast<std::size_t>(j)]);
            }
        }
    }
    s.flip(static_cast<std::size_t>(v));
}

Solution perturb(const Solution& s, double alpha, Rng& rng) {
    if (alpha < 0.0 || alpha > 1.0)
        throw ContractViolation("perturbation factor outside [0, 1]");
    const std::size_t n = s.size();
    std::size_t k = static_cast<std::size_t>(std::llround(alpha * static_cast<double>(n)));
    k = std::max<std::size_t>(1, std::min(k, n));
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i)
        idx[i] = i;
    Solution out = s;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.index(n - i);
        std::swap(idx[i], idx[j]);
        out.flip(idx[i]);
    }
    return out;
}

} // namespace graybox
