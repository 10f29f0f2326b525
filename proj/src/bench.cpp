#include "graybox/bench.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <thread>

namespace graybox {

const char* const kCrossoverCsvHeader =
    "instance,operator,beta,h,runtime_ns,qir,log2_explored,full_dynastic,"
    "fitness_x,fitness_y,fitness_z,error";

const char* const kRunCsvHeader =
    "instance,algorithm,operator,beta,run,seed,best_fitness,quality,iterations,"
    "crossover_budget_errors,error";

namespace {

std::string sanitize(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r')
            c = ';';
    return s;
}

// parent pair at exact Hamming distance round(fraction * n)
std::pair<Solution, Solution> make_pair_at(std::size_t n, double fraction, Rng& rng) {
    Solution x = rng.random_solution(n);
    std::size_t k = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
    k = std::max<std::size_t>(1, std::min(k, n));
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i)
        idx[i] = i;
    Solution y = x;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.index(n - i);
        std::swap(idx[i], idx[j]);
        y.flip(idx[i]);
    }
    return {std::move(x), std::move(y)};
}

void run_tasks(int workers, std::size_t task_count, const std::function<void(std::size_t)>& task) {
    if (workers <= 1) {
        for (std::size_t t = 0; t < task_count; ++t)
            task(t);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t t = static_cast<std::size_t>(w); t < task_count;
                 t += static_cast<std::size_t>(workers))
                task(t);
        });
    for (auto& th : pool)
        th.join();
}

} // namespace

void bench_crossover(const MkLandscape& landscape, const Vig& vig, const ExperimentSpec& spec,
                     std::ostream& csv) {
    if (spec.pairs < 1)
        throw ContractViolation("bench needs at least one pair per distance");
    for (double f : spec.hamming_fractions)
        if (f <= 0.0 || f > 1.0)
            throw ContractViolation("hamming fraction outside (0, 1]");

    const std::size_t n = static_cast<std::size_t>(landscape.n());
    const std::size_t dists = spec.hamming_fractions.size();
    const std::size_t task_count = dists * static_cast<std::size_t>(spec.pairs);
    std::vector<std::string> rows(task_count);

    run_tasks(spec.workers, task_count, [&](std::size_t t) {
        const std::size_t d = t / static_cast<std::size_t>(spec.pairs);
        const std::size_t p = t % static_cast<std::size_t>(spec.pairs);
        Rng pair_rng = Rng::derive(spec.seed, 1, d, p);
        const auto [x, y] = make_pair_at(n, spec.hamming_fractions[d], pair_rng);
        const std::size_t h = x.hamming(y);
        const std::int64_t fx = landscape.evaluate(x);
        const std::int64_t fy = landscape.evaluate(y);

        std::ostringstream out;
        for (std::size_t oi = 0; oi < spec.operators.size(); ++oi) {
            const CrossoverOp op = spec.operators[oi];
            Rng op_rng = Rng::derive(spec.seed, 1000 + oi, d, p);
            out << sanitize(spec.instance_id) << ',' << to_string(op) << ',' << spec.beta << ','
                << h << ',';
            try {
                const CrossoverReport r = apply_crossover(landscape, vig, op, spec.beta,
                                                          spec.max_table_entries, x, y, op_rng);
                out << r.elapsed.count() << ',';
                if (r.qir)
                    out << r.qir->decimal(12);
                out << ',';
                if (r.log2_explored)
                    out << *r.log2_explored;
                out << ',';
                if (r.full_dynastic)
                    out << (*r.full_dynastic ? 1 : 0);
                out << ',' << fx << ',' << fy << ',' << r.fitness << ",\n";
            } catch (const BudgetError& e) {
                out << ",,,," << fx << ',' << fy << ",," << sanitize(e.what()) << '\n';
            }
        }
        rows[t] = out.str();
    });

    csv << kCrossoverCsvHeader << '\n';
    for (const std::string& row : rows)
        csv << row;
}

const char* to_string(Algorithm a) {
    switch (a) {
    case Algorithm::Drils:
        return "drils";
    case Algorithm::Ea:
        return "ea";
    case Algorithm::Idpx:
        return "idpx";
    }
    return "?";
}

void run_algorithm(const MkLandscape& landscape, const Vig& vig, const RunSpec& spec,
                   std::ostream& csv,
                   const std::function<void(int, const SearchResult&)>& sink) {
    if (spec.runs < 1)
        throw ContractViolation("need at least one run");
    std::vector<std::string> rows(static_cast<std::size_t>(spec.runs));
    std::vector<SearchResult> results(static_cast<std::size_t>(spec.runs));

    run_tasks(spec.workers, static_cast<std::size_t>(spec.runs), [&](std::size_t r) {
        const std::uint64_t seed = spec.base_seed + r;
        std::ostringstream out;
        const char* op_name = "";
        int beta = 0;
        std::string error;
        SearchResult res;
        try {
            switch (spec.algorithm) {
            case Algorithm::Drils: {
                DrilsConfig c = spec.drils;
                c.seed = seed;
                op_name = to_string(c.op);
                beta = c.op == CrossoverOp::Dpx ? c.beta : 0;
                res = drils(landscape, vig, c);
                break;
            }
            case Algorithm::Ea: {
                EaConfig c = spec.ea;
                c.seed = seed;
                op_name = to_string(c.op);
                beta = c.op == CrossoverOp::Dpx ? c.beta : 0;
                res = ea(landscape, vig, c);
                break;
            }
            case Algorithm::Idpx: {
                IdpxConfig c = spec.idpx;
                c.seed = seed;
                op_name = "dpx";
                beta = c.beta;
                res = idpx(landscape, vig, c);
                break;
            }
            }
        } catch (const std::exception& e) {
            error = e.what();
        }
        out << sanitize(spec.instance_id) << ',' << to_string(spec.algorithm) << ',' << op_name
            << ',' << beta << ',' << r << ',' << seed << ',';
        if (error.empty()) {
            out << res.best_fitness << ',';
            if (spec.fstar && *spec.fstar != 0)
                out << Rational(res.best_fitness, *spec.fstar).decimal(12);
            out << ',' << res.iterations << ',' << res.crossover_budget_errors << ",\n";
        } else {
            out << ",,,," << sanitize(error) << '\n';
        }
        rows[r] = out.str();
        results[r] = std::move(res);
    });

    csv << kRunCsvHeader << '\n';
    for (int r = 0; r < spec.runs; ++r) {
        csv << rows[static_cast<std::size_t>(r)];
        if (sink)
            sink(r, results[static_cast<std::size_t>(r)]);
    }
}

void write_trajectory(std::ostream& out, const SearchResult& result) {
    out << "t_ns,fitness,iteration\n";
    for (const TrajectoryPoint& p : result.trajectory)
        out << p.t_ns << ',' << p.fitness << ',' << p.iteration << '\n';
}

} // namespace graybox
