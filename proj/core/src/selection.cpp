#include "gasolve/selection.hpp"

#include <algorithm>
#include <string>

#include "gasolve/errors.hpp"
#include "gasolve/objective.hpp"

namespace gasolve {

SelectionTable build_selection_table(std::span<const std::int64_t> costs) {
    SelectionTable table;
    table.fitness.reserve(costs.size());
    for (std::int64_t c : costs) {
        table.fitness.push_back(fitness(c));
    }
    table.total = 0.0;
    for (double f : table.fitness) {
        table.total += f;
    }
    table.probabilities.reserve(costs.size());
    table.cumulative.reserve(costs.size());
    double acc = 0.0;
    for (double f : table.fitness) {
        const double p = f / table.total;
        table.probabilities.push_back(p);
        acc += p;
        table.cumulative.push_back(acc);
    }
    return table;
}

std::size_t roulette_pick(const SelectionTable& table, double r) {
    auto it = std::upper_bound(table.cumulative.begin(), table.cumulative.end(), r);
    if (it == table.cumulative.end()) {
        return table.cumulative.size() - 1;
    }
    return static_cast<std::size_t>(it - table.cumulative.begin());
}

SelectionOutcome select_population(const Population& pop,
                                   std::span<const std::int64_t> costs,
                                   RandomSource& src) {
    if (costs.size() != pop.size()) {
        throw LengthMismatch("population has " + std::to_string(pop.size()) +
                             " members but " + std::to_string(costs.size()) + " costs given");
    }
    SelectionOutcome out;
    out.table = build_selection_table(costs);
    out.draws.reserve(pop.size());
    out.selected.reserve(pop.size());
    out.population.members.reserve(pop.size());
    for (std::size_t k = 0; k < pop.size(); ++k) {
        const double r = src.next_float01();
        const std::size_t idx = roulette_pick(out.table, r);
        out.draws.push_back(r);
        out.selected.push_back(idx);
        out.population.members.push_back(pop[idx]);
    }
    return out;
}

} // namespace gasolve
