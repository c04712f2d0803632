#include "gasolve/engine.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "gasolve/errors.hpp"
#include "gasolve/selection.hpp"
#include "gasolve/variation.hpp"

namespace gasolve {

namespace {

template <typename F>
auto run_phase(const char* phase, int generation, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ScriptError& e) {
        std::string msg = std::string(e.what()) + " during " + phase;
        if (generation > 0) {
            msg += ", generation " + std::to_string(generation);
        }
        throw RunPhaseError(msg);
    }
}

std::vector<int> to_one_based(const std::vector<std::size_t>& indices) {
    std::vector<int> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) {
        out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

struct BestTracker {
    Chromosome chromosome;
    std::int64_t cost = std::numeric_limits<std::int64_t>::max();
    int generation = 0;

    void observe(const Population& pop, const std::vector<std::int64_t>& costs, int gen) {
        for (std::size_t i = 0; i < costs.size(); ++i) {
            if (costs[i] < cost) {
                cost = costs[i];
                chromosome = pop[i];
                generation = gen;
            }
        }
    }
};

} // namespace

bool early_stop_check(std::int64_t best_cost, const GaConfig& config) {
    return config.stop_on_zero && best_cost == 0;
}

RunResult run(const GaConfig& config, const ObjectiveContract& objective, RandomSource& src,
              const RunOptions& options) {
    config.validate();

    Population pop = run_phase("initialization", 0,
                               [&] { return init_population(config, src); });
    std::vector<std::int64_t> costs = evaluate_population(objective, pop);

    BestTracker best;
    best.observe(pop, costs, 0);

    RunResult result;
    const std::size_t length = static_cast<std::size_t>(config.chromosome_length);
    const int total_cells = config.population_size * config.chromosome_length;

    int completed = 0;
    for (int gen = 1; gen <= config.generations; ++gen) {
        if (early_stop_check(best.cost, config)) {
            break;
        }

        GenerationTrace trace;
        trace.generation_index = gen;
        trace.population_before = pop;
        trace.objective_values = costs;

        SelectionOutcome sel = run_phase("selection", gen, [&] {
            return select_population(pop, costs, src);
        });
        trace.fitness_values = sel.table.fitness;
        trace.probabilities = sel.table.probabilities;
        trace.cumulative = sel.table.cumulative;
        trace.selection_draws = sel.draws;
        trace.selected_indices = to_one_based(sel.selected);
        pop = std::move(sel.population);

        ParentGating gating = run_phase("crossover gating", gen, [&] {
            return choose_parents(pop.size(), config.crossover_rate, src);
        });
        trace.crossover_draws = gating.draws;
        trace.crossover_parents = to_one_based(gating.parents);
        CrossoverPlan plan{std::move(gating.parents), {}};
        if (plan.parents.size() >= 2) {
            plan.cut_points = run_phase("cut points", gen, [&] {
                return draw_cut_points(plan.parents.size(), length, src);
            });
        }
        trace.cut_points = plan.cut_points;
        pop = apply_crossover(pop, plan);
        trace.population_after_crossover = pop;

        MutationPlan mutation;
        mutation.count = mutation_count(config.mutation_rate, static_cast<std::size_t>(total_cells));
        mutation.positions = run_phase("mutation positions", gen, [&] {
            return draw_mutation_positions(mutation.count, total_cells, src);
        });
        mutation.replacements = run_phase("mutation replacements", gen, [&] {
            return draw_replacement_values(mutation.count, config.bounds, src);
        });
        pop = apply_mutation(pop, mutation);
        trace.mutation_count = mutation.count;
        trace.mutation_positions = mutation.positions;
        trace.mutation_values = mutation.replacements;

        costs = evaluate_population(objective, pop);
        if (config.elitism) {
            auto worst = std::max_element(costs.begin(), costs.end());
            if (best.cost < *std::min_element(costs.begin(), costs.end())) {
                const std::size_t slot = static_cast<std::size_t>(worst - costs.begin());
                pop[slot] = best.chromosome;
                costs[slot] = best.cost;
            }
        }
        best.observe(pop, costs, gen);

        trace.population_after_mutation = pop;
        trace.best_objective_so_far = best.cost;

        if (options.on_generation) {
            options.on_generation(trace);
        }
        if (options.collect_traces) {
            result.traces.push_back(std::move(trace));
        }
        completed = gen;
    }

    result.best_chromosome = best.chromosome;
    result.best_cost = best.cost;
    result.generation_found = best.generation;
    result.generations_run = completed;
    result.final_population = std::move(pop);
    return result;
}

} // namespace gasolve
