#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gasolve/model.hpp"

namespace gasolve {

/// Fitness, probability and cumulative-probability columns for one
/// population's costs. probabilities sum to 1 and cumulative.back() is 1,
/// both to within floating-point accumulation error.
struct SelectionTable {
    std::vector<double> fitness;
    double total = 0.0;
    std::vector<double> probabilities;
    std::vector<double> cumulative;
};

/// Builds the table from non-negative costs. The fitness transform keeps the
/// total strictly positive, so this never fails for valid input.
SelectionTable build_selection_table(std::span<const std::int64_t> costs);

/// Roulette wheel: smallest 0-based index k with r < cumulative[k].
/// Strictly-less comparison, so r equal to a cumulative value selects the
/// next slot. If accumulated drift leaves r >= cumulative.back(), returns the
/// last index.
std::size_t roulette_pick(const SelectionTable& table, double r);

struct SelectionOutcome {
    SelectionTable table;
    std::vector<double> draws;          // the N floats consumed, in order
    std::vector<std::size_t> selected;  // 0-based source index per slot
    Population population;              // resampled population, same size
};

/// Draws exactly N floats R[1..N] in slot order and resamples with
/// replacement: new member k is pop[roulette_pick(table, R[k])]. Duplicates
/// are allowed and the incumbent best can be lost (no elitism here).
SelectionOutcome select_population(const Population& pop,
                                   std::span<const std::int64_t> costs,
                                   RandomSource& src);

} // namespace gasolve
