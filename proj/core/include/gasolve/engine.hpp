#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gasolve/model.hpp"
#include "gasolve/objective.hpp"

namespace gasolve {

/// Outcome of a full run. best_cost is the minimum over every population the
/// run evaluated, including the initial one; the population itself carries no
/// elitism by default, so the best chromosome is tracked here even when the
/// loop loses it.
struct RunResult {
    Chromosome best_chromosome;
    std::int64_t best_cost = 0;
    int generation_found = 0;   // 0 = initial population
    int generations_run = 0;
    std::vector<GenerationTrace> traces;  // filled only when requested
    Population final_population;
};

struct RunOptions {
    bool collect_traces = false;
    /// Called once per completed generation, before the next one starts.
    std::function<void(const GenerationTrace&)> on_generation;
};

/// Runs the full loop: initialize, then per generation evaluate -> select ->
/// crossover -> mutate, for config.generations generations (fewer when
/// stop_on_zero triggers). The post-mutation population is evaluated at the
/// end of every generation, so best-so-far reflects each generation's output.
///
/// Canonical draw order, which scripted sources must follow:
///   initialization: N*L ints (chromosome-major, gene-minor), then per
///   generation: N selection floats, N crossover gate floats, one cut-point
///   int per mating (only when >= 2 parents, in mating order), mutation
///   position ints (redraws included), mutation replacement ints.
///
/// A script error mid-run is rethrown as RunPhaseError naming the phase and
/// generation.
RunResult run(const GaConfig& config, const ObjectiveContract& objective, RandomSource& src,
              const RunOptions& options = {});

/// True iff stop-on-zero is enabled and the cost is 0.
bool early_stop_check(std::int64_t best_cost, const GaConfig& config);

} // namespace gasolve
