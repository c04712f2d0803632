#pragma once

#include <cstddef>
#include <vector>

#include "gasolve/model.hpp"

namespace gasolve {

/// Parents chosen for one generation's crossover, plus one cut point per
/// mating. parent index j mates with its cyclic successor j+1, so m parents
/// yield m matings (and m cut points) when m >= 2; a lone parent skips
/// crossover entirely (a cycle needs two).
struct CrossoverPlan {
    std::vector<std::size_t> parents;  // 0-based, strictly increasing scan order
    std::vector<int> cut_points;       // each in [1, L-1]; empty when < 2 parents
};

struct ParentGating {
    std::vector<double> draws;         // the N gate floats, in slot order
    std::vector<std::size_t> parents;  // 0-based, slot k joins iff draws[k] < rate
};

/// Draws one gate float per slot in index order; slot k becomes a parent iff
/// its draw is strictly below the crossover rate.
ParentGating choose_parents(std::size_t population_size, double rate, RandomSource& src);

/// Draws one cut point in [1, chromosome_length-1] per mating, in mating order.
std::vector<int> draw_cut_points(std::size_t matings, std::size_t chromosome_length,
                                 RandomSource& src);

/// choose_parents followed by draw_cut_points (cuts only when >= 2 parents).
CrossoverPlan plan_crossover(const Population& pop, double rate, RandomSource& src);

/// One-cut-point crossover over the parent cycle. Every offspring is computed
/// from the pre-crossover population (snapshot semantics), then all offspring
/// replace their first parent's slot simultaneously; non-parent slots are
/// untouched. Offspring j takes genes [0, cut) from parents[j] and the rest
/// from its cyclic successor. Throws InvalidCutPoint for cuts outside
/// [1, L-1].
Population apply_crossover(const Population& pop, const CrossoverPlan& plan);

/// Gene cells to overwrite this generation. Positions are 1-based over the
/// flattened population: position p lives in chromosome (p-1)/L, gene
/// (p-1)%L (0-based).
struct MutationPlan {
    int count = 0;
    std::vector<int> positions;     // distinct, each in [1, N*L]
    std::vector<int> replacements;  // within gene bounds, paired with positions
};

/// Number of cells to mutate: rate * total_cells, rounded half up.
int mutation_count(double rate, std::size_t total_cells);

/// Draws `count` distinct positions in [1, total_cells]. A draw that repeats
/// an already-chosen position is redrawn; every physical draw consumes one
/// source entry.
std::vector<int> draw_mutation_positions(int count, int total_cells, RandomSource& src);

/// Draws `count` replacement values, each uniform within bounds.
std::vector<int> draw_replacement_values(int count, GeneBounds bounds, RandomSource& src);

/// mutation_count + position draws + replacement draws for one generation.
MutationPlan plan_mutation(const GaConfig& config, RandomSource& src);

/// Writes each replacement into its position's cell; all other cells are
/// unchanged.
Population apply_mutation(const Population& pop, const MutationPlan& plan);

} // namespace gasolve
