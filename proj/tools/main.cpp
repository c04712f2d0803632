#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "commands.hpp"
#include "gasolve/errors.hpp"

namespace {

using namespace gasolve;
using namespace gasolve::cli;

struct Cli {
    RawArgs flags;
    std::string config_path;
    std::string trace_path;
    std::string expect_path;
    std::string out_path;
    std::string seeds_text;
    std::string crossover_rates_text;
    std::string mutation_rates_text;
    std::string genes_text;
    std::optional<std::uint64_t> cap;
    bool json_output = false;
    int jobs = 1;
};

void add_instance_flags(CLI::App* cmd, Cli& cli) {
    cmd->add_option("--coeffs", cli.flags.coeffs,
                    "objective coefficients, comma separated (default 1,2,3,4)");
    cmd->add_option("--target", cli.flags.target, "objective target value (default 30)");
    cmd->add_option("--bounds", cli.flags.bounds, "gene bounds as LO:HI (default 0:30)");
}

void add_run_flags(CLI::App* cmd, Cli& cli) {
    cmd->add_option("--pop", cli.flags.pop, "population size N (default 6)");
    cmd->add_option("--gens", cli.flags.gens, "generation count G (default 50)");
    cmd->add_option("--crossover-rate", cli.flags.crossover_rate, "crossover rate in [0,1]");
    cmd->add_option("--mutation-rate", cli.flags.mutation_rate, "mutation rate in [0,1]");
    auto* seed = cmd->add_option("--seed", cli.flags.seed, "seed for the built-in generator");
    auto* script = cmd->add_option("--script", cli.flags.script, "replay draws from a script file");
    seed->excludes(script);
    cmd->add_flag_callback(
        "--stop-on-zero", [&cli] { cli.flags.stop_on_zero = true; },
        "stop as soon as a zero-cost chromosome is found");
    cmd->add_flag_callback(
        "--elitism", [&cli] { cli.flags.elitism = true; },
        "reinsert the best-so-far chromosome over the worst each generation");
    cmd->add_option("--config", cli.config_path, "flat JSON config file; flags take precedence");
}

int dispatch(const CLI::App& app, const Cli& cli) {
    RawArgs merged = cli.flags;
    if (!cli.config_path.empty()) {
        merged = merge_args(cli.flags, load_config_file(cli.config_path));
    }
    RunSpec spec = build_spec(merged);
    spec.trace_path = cli.trace_path;
    spec.expect_path = cli.expect_path;
    spec.out_path = cli.out_path;
    spec.cap = cli.cap;
    spec.json_output = cli.json_output;
    spec.jobs = cli.jobs;
    if (!cli.seeds_text.empty()) spec.seeds = parse_seed_list(cli.seeds_text);
    if (!cli.crossover_rates_text.empty())
        spec.crossover_rates = parse_double_list(cli.crossover_rates_text);
    if (!cli.mutation_rates_text.empty())
        spec.mutation_rates = parse_double_list(cli.mutation_rates_text);
    if (!cli.genes_text.empty()) spec.genes = parse_int_list(cli.genes_text);

    if (app.got_subcommand("solve")) return cmd_solve(spec);
    if (app.got_subcommand("replay")) return cmd_replay(spec);
    if (app.got_subcommand("sweep")) return cmd_sweep(spec);
    if (app.got_subcommand("verify")) return cmd_verify(spec);
    return cmd_enumerate(spec);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gasolve: deterministic genetic-algorithm solver for integer chromosomes"};
    app.require_subcommand(1);
    Cli cli;

    auto* solve = app.add_subcommand("solve", "run the engine on an instance");
    add_instance_flags(solve, cli);
    add_run_flags(solve, cli);
    solve->add_option("--trace", cli.trace_path, "write a JSONL generation trace to this file");

    auto* replay = app.add_subcommand("replay", "re-run a scripted draw sequence and check traces");
    add_instance_flags(replay, cli);
    add_run_flags(replay, cli);
    replay->add_option("--trace", cli.trace_path, "write the JSONL trace here instead of stdout");
    replay->add_option("--expect", cli.expect_path, "expected JSONL trace to compare against");

    auto* sweep = app.add_subcommand("sweep", "grid of runs over rates and seeds, CSV report");
    add_instance_flags(sweep, cli);
    add_run_flags(sweep, cli);
    sweep->add_option("--crossover-rates", cli.crossover_rates_text,
                      "comma-separated crossover-rate grid");
    sweep->add_option("--mutation-rates", cli.mutation_rates_text,
                      "comma-separated mutation-rate grid");
    sweep->add_option("--seeds", cli.seeds_text, "seed list with ranges, e.g. 1,3..5");
    sweep->add_option("--out", cli.out_path, "CSV destination (default stdout)");
    sweep->add_option("--jobs", cli.jobs, "worker threads (default 1)");

    auto* verify = app.add_subcommand("verify", "check one chromosome against the objective");
    add_instance_flags(verify, cli);
    verify->add_option("--genes", cli.genes_text, "chromosome to check, comma separated")
        ->required();

    auto* enumerate = app.add_subcommand("enumerate", "brute-force scan for all exact solutions");
    add_instance_flags(enumerate, cli);
    enumerate->add_option("--cap", cli.cap, "stop after storing this many solutions");
    enumerate->add_flag("--json", cli.json_output, "emit count and solutions as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return dispatch(app, cli);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
