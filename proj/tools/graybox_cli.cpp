// Benchmark harness for the gray-box recombination library: NKQ instance
// generation, crossover micro-benchmarks and full algorithm runs, all with
// seeded, reproducible CSV output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "graybox/bench.hpp"
#include "graybox/dimacs.hpp"
#include "graybox/nkq.hpp"
#include "graybox/presets.hpp"
#include "graybox/vig.hpp"

namespace {

using namespace graybox;

// Estimated bytes per DP table entry, used to turn --memory-budget into an
// entry cap: hashed key, value, residue mask and bucket overhead.
constexpr std::uint64_t kBytesPerTableEntry = 96;

std::uint64_t entries_from_mib(double mib) {
    return static_cast<std::uint64_t>(mib * 1024.0 * 1024.0 / kBytesPerTableEntry);
}

MkLandscape load_instance(const std::string& path, const std::string& format_flag) {
    std::string format = format_flag;
    if (format.empty()) {
        const auto dot = path.rfind('.');
        format = dot == std::string::npos ? "" : path.substr(dot + 1);
    }
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open instance file: " + path);
    if (format == "nkq")
        return read_nkq(in);
    if (format == "cnf")
        return parse_maxsat(in, DimacsFormat::Cnf);
    if (format == "wcnf")
        return parse_maxsat(in, DimacsFormat::Wcnf);
    throw std::runtime_error("unknown instance format '" + format +
                             "' (use --format nkq|cnf|wcnf)");
}

std::vector<CrossoverOp> parse_operators(const std::string& csv) {
    std::vector<CrossoverOp> ops;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        const auto op = crossover_from_string(tok);
        if (!op)
            throw std::runtime_error("unknown operator '" + tok + "'");
        ops.push_back(*op);
    }
    if (ops.empty())
        throw std::runtime_error("no operators given");
    return ops;
}

std::vector<double> parse_fractions(const std::string& csv) {
    std::vector<double> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ','))
        out.push_back(std::stod(tok));
    if (out.empty())
        throw std::runtime_error("no hamming fractions given");
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    return out;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        auto out = open_out(path);
        out << content;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gray-box pseudo-Boolean optimization benchmark"};
    app.require_subcommand(1);

    // ---- gen nkq ----
    auto* gen = app.add_subcommand("gen", "generate benchmark instances");
    gen->require_subcommand(1);
    auto* gen_nkq = gen->add_subcommand("nkq", "generate a random NKQ landscape");
    int gn = 100, gk = 2, gq = 64;
    std::uint64_t gseed = 0;
    std::string gout;
    gen_nkq->add_option("-n,--vars", gn, "variable count")->required();
    gen_nkq->add_option("-K,--neighbors", gk, "extra variables per subfunction")->required();
    gen_nkq->add_option("-Q,--quantization", gq, "subfunction codomain size");
    gen_nkq->add_option("--seed", gseed, "generator seed");
    gen_nkq->add_option("--out", gout, "output file (default stdout)");

    // ---- bench-crossover ----
    auto* bench = app.add_subcommand("bench-crossover", "crossover micro-benchmark");
    std::string b_instance, b_format, b_ops = "ux,nx,px,apx,dpx", b_hamming = "0.01,0.02,0.04";
    std::string b_out;
    int b_beta = 1, b_pairs = 1000, b_workers = 1;
    std::uint64_t b_seed = 0;
    double b_budget_mib = 5120.0;
    bench->add_option("--instance", b_instance, "instance file")->required();
    bench->add_option("--format", b_format, "instance format (nkq|cnf|wcnf)");
    bench->add_option("--operators", b_ops, "comma list of ux,nx,px,apx,dpx");
    bench->add_option("--beta", b_beta, "DPX exploration bound");
    bench->add_option("--hamming", b_hamming, "comma list of distance fractions in (0,1]");
    bench->add_option("--pairs", b_pairs, "parent pairs per distance");
    bench->add_option("--seed", b_seed, "experiment seed");
    bench->add_option("--memory-budget", b_budget_mib, "DP table budget in MiB");
    bench->add_option("--workers", b_workers, "parallel workers");
    bench->add_option("--out", b_out, "CSV output file (default stdout)");

    // ---- run drils|ea|idpx ----
    auto* run = app.add_subcommand("run", "run a search algorithm");
    run->require_subcommand(1);
    std::string r_instance, r_format, r_op = "dpx", r_selection = "tournament", r_out, r_traj;
    std::string r_preset;
    int r_beta = 1, r_runs = 10, r_workers = 1, r_popsize = 50;
    double r_alpha = 0.2, r_pm = 0.01, r_time = 60.0, r_budget_mib = 5120.0;
    std::uint64_t r_seed = 0, r_maxiters = 0;
    std::int64_t r_fstar = 0;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--instance", r_instance, "instance file")->required();
        cmd->add_option("--format", r_format, "instance format (nkq|cnf|wcnf)");
        cmd->add_option("--beta", r_beta, "DPX exploration bound");
        cmd->add_option("--time-limit", r_time, "time limit per run, seconds");
        cmd->add_option("--max-iters", r_maxiters,
                        "iteration cap (0 = none); set for bit-reproducible runs");
        cmd->add_option("--runs", r_runs, "independent runs (seeds seed..seed+runs-1)");
        cmd->add_option("--seed", r_seed, "base seed");
        cmd->add_option("--memory-budget", r_budget_mib, "DP table budget in MiB");
        cmd->add_option("--workers", r_workers, "parallel workers");
        cmd->add_option("--fstar", r_fstar, "reference fitness for quality column");
        cmd->add_option("--out", r_out, "CSV output file (default stdout)");
        cmd->add_option("--traj", r_traj, "trajectory file stem (one file per run)");
        cmd->add_option("--preset", r_preset, "published parameter preset name");
    };
    auto* run_drils = run->add_subcommand("drils", "iterated local search with recombination");
    add_common(run_drils);
    run_drils->add_option("--operator", r_op, "crossover: ux|nx|px|apx|dpx");
    run_drils->add_option("--alpha", r_alpha, "perturbation factor in [0,0.5]");
    auto* run_ea = run->add_subcommand("ea", "steady-state evolutionary algorithm");
    add_common(run_ea);
    run_ea->add_option("--operator", r_op, "crossover: ux|nx|px|apx|dpx");
    run_ea->add_option("--pm", r_pm, "per-bit mutation probability");
    run_ea->add_option("--selection", r_selection, "tournament|rank|roulette");
    run_ea->add_option("--popsize", r_popsize, "population size");
    auto* run_idpx = run->add_subcommand("idpx", "iterated DPX on complementary parents");
    add_common(run_idpx);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_nkq->parsed()) {
            const MkLandscape landscape = generate_nkq(gn, gk, gq, gseed);
            std::ostringstream text;
            write_nkq(text, landscape, gk, gq, gseed);
            emit(gout, text.str());
            std::cerr << "nkq n=" << gn << " K=" << gk << " Q=" << gq << " seed=" << gseed
                      << " digest=" << nkq_digest(landscape, gk, gq, gseed) << '\n';
            return 0;
        }
        if (bench->parsed()) {
            const MkLandscape landscape = load_instance(b_instance, b_format);
            const Vig vig = build_vig(landscape);
            ExperimentSpec spec;
            spec.instance_id = b_instance;
            spec.operators = parse_operators(b_ops);
            spec.beta = b_beta;
            spec.max_table_entries = entries_from_mib(b_budget_mib);
            spec.hamming_fractions = parse_fractions(b_hamming);
            spec.pairs = b_pairs;
            spec.seed = b_seed;
            spec.workers = b_workers;
            std::ostringstream csv;
            bench_crossover(landscape, vig, spec, csv);
            emit(b_out, csv.str());
            return 0;
        }
        if (run->parsed()) {
            const MkLandscape landscape = load_instance(r_instance, r_format);
            const Vig vig = build_vig(landscape);
            RunSpec spec;
            spec.instance_id = r_instance;
            spec.runs = r_runs;
            spec.base_seed = r_seed;
            spec.workers = r_workers;
            if (r_fstar != 0)
                spec.fstar = r_fstar;

            std::optional<Preset> preset;
            if (!r_preset.empty()) {
                preset = find_preset(r_preset);
                if (!preset)
                    throw std::runtime_error("unknown preset '" + r_preset + "'");
            }
            const auto op = crossover_from_string(preset ? to_string(preset->op) : r_op);
            if (!op)
                throw std::runtime_error("unknown operator '" + r_op + "'");

            if (run_drils->parsed()) {
                spec.algorithm = Algorithm::Drils;
                spec.drils.op = *op;
                spec.drils.alpha = preset ? preset->alpha : r_alpha;
                spec.drils.beta = preset && preset->op == CrossoverOp::Dpx ? preset->beta : r_beta;
                spec.drils.max_table_entries = entries_from_mib(r_budget_mib);
                spec.drils.time_limit_s = r_time;
                spec.drils.max_iterations = r_maxiters;
            } else if (run_ea->parsed()) {
                spec.algorithm = Algorithm::Ea;
                spec.ea.op = *op;
                spec.ea.p_m = preset ? preset->p_m : r_pm;
                spec.ea.popsize = preset ? preset->popsize : r_popsize;
                if (preset) {
                    spec.ea.selection = preset->selection;
                } else {
                    const auto sel = selection_from_string(r_selection);
                    if (!sel)
                        throw std::runtime_error("unknown selection '" + r_selection + "'");
                    spec.ea.selection = *sel;
                }
                spec.ea.beta = preset && preset->op == CrossoverOp::Dpx ? preset->beta : r_beta;
                spec.ea.max_table_entries = entries_from_mib(r_budget_mib);
                spec.ea.time_limit_s = r_time;
                spec.ea.max_iterations = r_maxiters;
            } else {
                spec.algorithm = Algorithm::Idpx;
                spec.idpx.beta = preset ? preset->beta : r_beta;
                spec.idpx.max_table_entries = entries_from_mib(r_budget_mib);
                spec.idpx.time_limit_s = r_time;
                spec.idpx.max_iterations = r_maxiters;
            }

            std::ostringstream csv;
            run_algorithm(landscape, vig, spec, csv, [&](int runIdx, const SearchResult& res) {
                if (r_traj.empty())
                    return;
                auto out = open_out(r_traj + "_run" + std::to_string(runIdx) + ".traj");
                write_trajectory(out, res);
            });
            emit(r_out, csv.str());
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
