#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gasolve/model.hpp"
#include "gasolve/rng.hpp"

namespace gasolve::cli {

/// Raw option values as they arrive from the command line or a config file,
/// before validation. Unset fields fall back to config-file values and then
/// to built-in defaults.
struct RawArgs {
    std::optional<std::string> coeffs;
    std::optional<std::int64_t> target;
    std::optional<std::string> bounds;
    std::optional<int> pop;
    std::optional<int> gens;
    std::optional<double> crossover_rate;
    std::optional<double> mutation_rate;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> script;
    std::optional<bool> stop_on_zero;
    std::optional<bool> elitism;
};

/// Fully validated parameters for one invocation.
struct RunSpec {
    std::vector<int> coefficients{1, 2, 3, 4};
    std::int64_t target = 30;
    GaConfig config;

    std::string trace_path;  // solve/replay: JSONL destination ("" = stdout for replay, off for solve)
    std::string expect_path; // replay: expected-trace fixture
    std::string out_path;    // sweep: CSV destination ("" = stdout)

    std::vector<double> crossover_rates; // sweep grid; empty = {config.crossover_rate}
    std::vector<double> mutation_rates;
    std::vector<std::uint64_t> seeds;

    std::vector<int> genes; // verify: chromosome under test

    std::optional<std::uint64_t> cap; // enumerate: stored-solution cap
    bool json_output = false;
    int jobs = 1; // sweep worker threads
};

/// "1,2,3,4" -> {1,2,3,4}. Throws ConfigError on anything else.
std::vector<int> parse_int_list(const std::string& text);

/// "0.25,0.5" -> {0.25, 0.5}.
std::vector<double> parse_double_list(const std::string& text);

/// "0:30" -> GeneBounds{0,30}; lo must not exceed hi.
GeneBounds parse_bounds(const std::string& text);

/// Comma-separated seeds with inclusive ranges: "1,3..5" -> {1,3,4,5}.
std::vector<std::uint64_t> parse_seed_list(const std::string& text);

/// Flat key/value JSON document holding the same keys as the long flags
/// (coeffs, target, bounds, pop, gens, crossover_rate, mutation_rate, seed,
/// script, stop_on_zero, elitism). Unknown keys are rejected.
RawArgs load_config_file(const std::string& path);

/// Field-wise precedence: any value present in `flags` wins over `config`.
RawArgs merge_args(const RawArgs& flags, const RawArgs& config);

/// Builds and validates the instance + GaConfig part of a spec. Seed and
/// script are mutually exclusive; chromosome length follows the coefficient
/// count. Throws ConfigError with an actionable message on any bad value.
RunSpec build_spec(const RawArgs& args);

/// Instantiates the RandomSource selected by config.rng_mode.
std::unique_ptr<RandomSource> make_source(const RngMode& mode);

} // namespace gasolve::cli
