#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "graybox/drils.hpp"
#include "graybox/ea.hpp"
#include "graybox/hill_climber.hpp"
#include "graybox/idpx.hpp"
#include "graybox/nkq.hpp"
#include "graybox/presets.hpp"
#include "support/oracles.hpp"

using namespace graybox;

TEST_CASE("hill climber reaches verified local optima") {
    const MkLandscape f = generate_nkq(100, 2, 64, 13);
    HillClimber climber(f);
    Rng rng(1);
    for (int t = 0; t < 5; ++t) {
        const Solution lo = climber.climb(rng.random_solution(100), rng);
        const std::int64_t fit = oracles::naive_evaluate(f, lo);
        CHECK(fit == climber.last_fitness());
        for (std::size_t i = 0; i < 100; ++i) {
            Solution nb = lo;
            nb.flip(i);
            CHECK(oracles::naive_evaluate(f, nb) <= fit);
        }
    }
}

TEST_CASE("hill climber leaves local optima unchanged") {
    const MkLandscape f = generate_nkq(40, 2, 64, 21);
    HillClimber climber(f);
    Rng rng(2);
    const Solution lo = climber.climb(rng.random_solution(40), rng);
    CHECK(climber.climb(lo, rng) == lo);
}

TEST_CASE("hill climber solves separable instances exactly") {
    const MkLandscape f = generate_nkq(30, 0, 16, 3);
    HillClimber climber(f);
    Rng rng(3);
    const Solution lo = climber.climb(rng.random_solution(30), rng);
    Solution best(30);
    for (int l = 0; l < 30; ++l)
        best.set(static_cast<std::size_t>(l),
                 f.subfunction(l).table()[1] > f.subfunction(l).table()[0]);
    CHECK(f.evaluate(lo) == f.evaluate(best));
}

TEST_CASE("perturb flips the requested number of distinct bits") {
    Rng rng(4);
    const Solution s = rng.random_solution(50);
    CHECK(perturb(s, 0.0, rng).hamming(s) == 1);
    CHECK(perturb(s, 1.0, rng) == s.complement());
    for (double alpha : {0.1, 0.25, 0.4})
        for (int t = 0; t < 20; ++t)
            CHECK(perturb(s, alpha, rng).hamming(s) ==
                  static_cast<std::size_t>(std::llround(alpha * 50)));
    CHECK_THROWS_AS(perturb(s, 1.5, rng), ContractViolation);
}

TEST_CASE("drils basics") {
    const MkLandscape f = generate_nkq(60, 2, 64, 17);
    const Vig vig = build_vig(f);

    SUBCASE("zero time limit returns the first local optimum") {
        DrilsConfig c;
        c.alpha = 0.2;
        c.op = CrossoverOp::Px;
        c.time_limit_s = 0.0;
        c.seed = 1;
        const SearchResult r = drils(f, vig, c);
        CHECK(r.iterations == 0);
        REQUIRE(!r.trajectory.empty());
        CHECK(r.best_fitness == f.evaluate(r.best));
        HillClimber climber(f);
        Rng rng(5);
        for (std::size_t i = 0; i < 60; ++i) {
            Solution nb = r.best;
            nb.flip(i);
            CHECK(f.evaluate(nb) <= r.best_fitness);
        }
    }
    SUBCASE("trajectory is strictly improving and reproducible") {
        DrilsConfig c;
        c.alpha = 0.25;
        c.op = CrossoverOp::Dpx;
        c.beta = 1;
        c.time_limit_s = 0.3;
        c.seed = 7;
        const SearchResult a = drils(f, vig, c);
        for (std::size_t i = 1; i < a.trajectory.size(); ++i)
            CHECK(a.trajectory[i].fitness > a.trajectory[i - 1].fitness);
        CHECK(a.best_fitness == a.trajectory.back().fitness);
        const SearchResult b = drils(f, vig, c);
        CHECK(a.best == b.best);
        CHECK(a.best_fitness == b.best_fitness);
    }
    SUBCASE("budget errors fall back to the perturbed optimum") {
        DrilsConfig c;
        c.alpha = 0.3;
        c.op = CrossoverOp::Dpx;
        c.beta = 2;
        c.max_table_entries = 0; // force budget errors on every crossover
        c.time_limit_s = 0.2;
        c.seed = 3;
        const SearchResult r = drils(f, vig, c);
        CHECK(r.crossover_budget_errors > 0);
        CHECK(r.crossover_budget_errors <= r.iterations);
    }
    SUBCASE("alpha outside the configured range is rejected") {
        DrilsConfig c;
        c.alpha = 0.7;
        CHECK_THROWS_AS(drils(f, vig, c), ContractViolation);
    }
    SUBCASE("separable instances are solved immediately") {
        const MkLandscape sep = generate_nkq(50, 0, 32, 27);
        const Vig svig = build_vig(sep);
        DrilsConfig c;
        c.alpha = 0.1;
        c.op = CrossoverOp::Px;
        c.time_limit_s = 0.1;
        const SearchResult r = drils(sep, svig, c);
        Solution best(50);
        for (int l = 0; l < 50; ++l)
            best.set(static_cast<std::size_t>(l),
                     sep.subfunction(l).table()[1] > sep.subfunction(l).table()[0]);
        CHECK(r.best_fitness == sep.evaluate(best));
    }
}

TEST_CASE("ea basics") {
    const MkLandscape f = generate_nkq(40, 2, 64, 23);
    const Vig vig = build_vig(f);

    SUBCASE("strict replacement never accepts equals") {
        // constant landscape: every solution has the same fitness
        MkLandscape flat(6);
        for (int v = 0; v < 6; ++v)
            flat.add(Subfunction::from_table({v}, {3, 3}));
        const Vig fvig = build_vig(flat);
        EaConfig c;
        c.popsize = 2;
        c.p_m = 0.0;
        c.op = CrossoverOp::Ux;
        c.time_limit_s = 0.05;
        const SearchResult r = ea(flat, fvig, c);
        CHECK(r.trajectory.size() == 1); // only the initial best is ever logged
        CHECK(r.best_fitness == 18);
    }
    SUBCASE("best fitness is monotone and reproducible") {
        EaConfig c;
        c.popsize = 20;
        c.p_m = 0.02;
        c.selection = Selection::Rank;
        c.op = CrossoverOp::Px;
        c.time_limit_s = 0.3;
        c.seed = 11;
        const SearchResult a = ea(f, vig, c);
        for (std::size_t i = 1; i < a.trajectory.size(); ++i)
            CHECK(a.trajectory[i].fitness > a.trajectory[i - 1].fitness);
        const SearchResult b = ea(f, vig, c);
        CHECK(a.best_fitness == b.best_fitness);
    }
    SUBCASE("config validation") {
        EaConfig c;
        c.popsize = 1;
        CHECK_THROWS_AS(ea(f, vig, c), ContractViolation);
    }
    SUBCASE("budget errors skip the iteration") {
        EaConfig c;
        c.popsize = 10;
        c.p_m = 0.0; // equal-parent picks short-circuit crossover; keep them inert
        c.op = CrossoverOp::Dpx;
        c.max_table_entries = 0;
        c.time_limit_s = 0.05;
        const SearchResult r = ea(f, vig, c);
        CHECK(r.crossover_budget_errors > 0);
        CHECK(r.trajectory.size() == 1); // nothing ever replaced
    }
}

TEST_CASE("selection distributions match analytic probabilities") {
    const std::vector<std::int64_t> fitness = {10, 40, 20, 40, 90};
    const int draws = 100000;
    const double tolerance = 0.02;

    SUBCASE("tournament") {
        // P(i) = (#{f_b <= f_i} + #{f_a < f_i}) / 25 with the first pick winning ties
        std::vector<double> expected(5);
        for (std::size_t i = 0; i < 5; ++i) {
            int leq = 0, lt = 0;
            for (std::size_t j = 0; j < 5; ++j) {
                leq += fitness[j] <= fitness[i];
                lt += fitness[j] < fitness[i];
            }
            expected[i] = (leq + lt) / 25.0;
        }
        Rng rng(31);
        std::vector<int> counts(5, 0);
        for (int t = 0; t < draws; ++t)
            ++counts[static_cast<std::size_t>(select_tournament(fitness, rng))];
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(std::abs(counts[i] / static_cast<double>(draws) - expected[i]) < tolerance);
    }
    SUBCASE("rank") {
        // ascending stable order: 10,20,40,40,90 -> ranks by index: 0:1, 2:2, 1:3, 3:4, 4:5
        const std::vector<double> expected = {1 / 15.0, 3 / 15.0, 2 / 15.0, 4 / 15.0, 5 / 15.0};
        Rng rng(37);
        std::vector<int> counts(5, 0);
        for (int t = 0; t < draws; ++t)
            ++counts[static_cast<std::size_t>(select_rank(fitness, rng))];
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(std::abs(counts[i] / static_cast<double>(draws) - expected[i]) < tolerance);
    }
    SUBCASE("roulette") {
        const double total = 200.0;
        Rng rng(41);
        std::vector<int> counts(5, 0);
        for (int t = 0; t < draws; ++t)
            ++counts[static_cast<std::size_t>(select_roulette(fitness, rng))];
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(std::abs(counts[i] / static_cast<double>(draws) -
                           static_cast<double>(fitness[i]) / total) < tolerance);
    }
    SUBCASE("roulette with equal fitness is uniform") {
        const std::vector<std::int64_t> flat = {7, 7, 7, 7};
        Rng rng(43);
        std::vector<int> counts(4, 0);
        for (int t = 0; t < draws; ++t)
            ++counts[static_cast<std::size_t>(select_roulette(flat, rng))];
        for (int c : counts)
            CHECK(std::abs(c / static_cast<double>(draws) - 0.25) < tolerance);
    }
    SUBCASE("roulette shifts negative fitness") {
        const std::vector<std::int64_t> mixed = {-10, 0, 10};
        Rng rng(47);
        std::vector<int> counts(3, 0);
        for (int t = 0; t < draws; ++t)
            ++counts[static_cast<std::size_t>(select_roulette(mixed, rng))];
        CHECK(counts[0] == 0); // shifted weight zero
        CHECK(std::abs(counts[1] / static_cast<double>(draws) - 1 / 3.0) < tolerance);
        CHECK(std::abs(counts[2] / static_cast<double>(draws) - 2 / 3.0) < tolerance);
    }
}

TEST_CASE("idpx") {
    SUBCASE("bounded treewidth with large beta solves in one application") {
        const MkLandscape f = generate_nkq(12, 0, 16, 29); // separable
        const Vig vig = build_vig(f);
        IdpxConfig c;
        c.beta = 12;
        c.time_limit_s = 0.0;
        c.seed = 1;
        const SearchResult r = idpx(f, vig, c);
        CHECK(r.iterations == 1);
        Solution best(12);
        for (int l = 0; l < 12; ++l)
            best.set(static_cast<std::size_t>(l),
                     f.subfunction(l).table()[1] > f.subfunction(l).table()[0]);
        CHECK(r.best_fitness == f.evaluate(best));
    }
    SUBCASE("budget errors discard the pair") {
        const MkLandscape f = generate_nkq(20, 2, 16, 33);
        const Vig vig = build_vig(f);
        IdpxConfig c;
        c.beta = 2;
        c.max_table_entries = 0;
        c.time_limit_s = 0.02;
        const SearchResult r = idpx(f, vig, c);
        CHECK(r.crossover_budget_errors == r.iterations);
        CHECK(r.trajectory.empty());
    }
    SUBCASE("matches exhaustive search on a small rugged instance") {
        const MkLandscape f = generate_nkq(16, 2, 64, 31);
        const Vig vig = build_vig(f);
        IdpxConfig c;
        c.beta = 16;
        c.max_table_entries = std::uint64_t{1} << 24;
        c.time_limit_s = 0.0;
        c.seed = 2;
        const SearchResult r = idpx(f, vig, c);
        std::int64_t best = 0;
        for (std::uint32_t m = 0; m < (std::uint32_t{1} << 16); ++m) {
            Solution s(16);
            for (int i = 0; i < 16; ++i)
                s.set(static_cast<std::size_t>(i), (m >> i) & 1);
            best = std::max(best, f.evaluate(s));
        }
        CHECK(r.best_fitness == best);
    }
}

TEST_CASE("published presets are available") {
    const auto p = find_preset("drils-dpx-nkq-k2");
    REQUIRE(p.has_value());
    CHECK(p->beta == 1);
    CHECK(p->alpha == doctest::Approx(0.2219));
    CHECK(find_preset("ea-px-nkq-k5")->popsize == 70);
    CHECK(find_preset("idpx-nkq")->beta == 5);
    CHECK(!find_preset("nope").has_value());
    CHECK(all_presets().size() == 42);
}
