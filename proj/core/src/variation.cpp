#include "gasolve/variation.hpp"

#include <cmath>
#include <string>

#include "gasolve/errors.hpp"

namespace gasolve {

ParentGating choose_parents(std::size_t population_size, double rate, RandomSource& src) {
    ParentGating out;
    out.draws.reserve(population_size);
    for (std::size_t k = 0; k < population_size; ++k) {
        const double r = src.next_float01();
        out.draws.push_back(r);
        if (r < rate) {
            out.parents.push_back(k);
        }
    }
    return out;
}

std::vector<int> draw_cut_points(std::size_t matings, std::size_t chromosome_length,
                                 RandomSource& src) {
    std::vector<int> cuts;
    cuts.reserve(matings);
    for (std::size_t j = 0; j < matings; ++j) {
        cuts.push_back(src.next_int_inclusive(1, static_cast<int>(chromosome_length) - 1));
    }
    return cuts;
}

CrossoverPlan plan_crossover(const Population& pop, double rate, RandomSource& src) {
    ParentGating gating = choose_parents(pop.size(), rate, src);
    CrossoverPlan plan{std::move(gating.parents), {}};
    if (plan.parents.size() >= 2) {
        plan.cut_points = draw_cut_points(plan.parents.size(), pop.chromosome_length(), src);
    }
    return plan;
}

Population apply_crossover(const Population& pop, const CrossoverPlan& plan) {
    const std::size_t m = plan.parents.size();
    if (m < 2) {
        return pop;
    }
    if (plan.cut_points.size() != m) {
        throw Error("crossover plan has " + std::to_string(m) + " parents but " +
                    std::to_string(plan.cut_points.size()) + " cut points");
    }
    const std::size_t length = pop.chromosome_length();
    Population out = pop;
    for (std::size_t j = 0; j < m; ++j) {
        const int cut = plan.cut_points[j];
        if (cut < 1 || static_cast<std::size_t>(cut) > length - 1) {
            throw InvalidCutPoint("cut point " + std::to_string(cut) + " outside [1," +
                                  std::to_string(length - 1) + "]");
        }
        const Chromosome& first = pop[plan.parents[j]];
        const Chromosome& second = pop[plan.parents[(j + 1) % m]];
        Chromosome offspring = first;
        for (std::size_t i = static_cast<std::size_t>(cut); i < length; ++i) {
            offspring.genes[i] = second.genes[i];
        }
        out[plan.parents[j]] = std::move(offspring);
    }
    return out;
}

int mutation_count(double rate, std::size_t total_cells) {
    return static_cast<int>(std::floor(rate * static_cast<double>(total_cells) + 0.5));
}

std::vector<int> draw_mutation_positions(int count, int total_cells, RandomSource& src) {
    if (count > total_cells) {
        throw Error("mutation count " + std::to_string(count) + " exceeds " +
                    std::to_string(total_cells) + " gene cells");
    }
    std::vector<int> positions;
    positions.reserve(static_cast<std::size_t>(count));
    std::vector<char> taken(static_cast<std::size_t>(total_cells) + 1, 0);
    while (positions.size() < static_cast<std::size_t>(count)) {
        const int p = src.next_int_inclusive(1, total_cells);
        if (!taken[static_cast<std::size_t>(p)]) {
            taken[static_cast<std::size_t>(p)] = 1;
            positions.push_back(p);
        }
    }
    return positions;
}

std::vector<int> draw_replacement_values(int count, GeneBounds bounds, RandomSource& src) {
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        values.push_back(src.next_int_inclusive(bounds.lo, bounds.hi));
    }
    return values;
}

MutationPlan plan_mutation(const GaConfig& config, RandomSource& src) {
    const int total = config.population_size * config.chromosome_length;
    MutationPlan plan;
    plan.count = mutation_count(config.mutation_rate, static_cast<std::size_t>(total));
    plan.positions = draw_mutation_positions(plan.count, total, src);
    plan.replacements = draw_replacement_values(plan.count, config.bounds, src);
    return plan;
}

Population apply_mutation(const Population& pop, const MutationPlan& plan) {
    const std::size_t length = pop.chromosome_length();
    const std::size_t total = pop.size() * length;
    if (plan.positions.size() != plan.replacements.size() ||
        plan.positions.size() != static_cast<std::size_t>(plan.count)) {
        throw Error("mutation plan sizes disagree");
    }
    Population out = pop;
    for (std::size_t i = 0; i < plan.positions.size(); ++i) {
        const int p = plan.positions[i];
        if (p < 1 || static_cast<std::size_t>(p) > total) {
            throw Error("mutation position " + std::to_string(p) + " outside [1," +
                        std::to_string(total) + "]");
        }
        const std::size_t cell = static_cast<std::size_t>(p - 1);
        out[cell / length].genes[cell % length] = plan.replacements[i];
    }
    return out;
}

} // namespace gasolve
