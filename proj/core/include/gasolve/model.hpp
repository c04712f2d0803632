#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gasolve/rng.hpp"

namespace gasolve {

/// Inclusive range of admissible gene values.
struct GeneBounds {
    int lo = 0;
    int hi = 0;

    bool contains(int v) const noexcept { return lo <= v && v <= hi; }

    friend bool operator==(const GeneBounds&, const GeneBounds&) = default;
};

/// One candidate solution: a fixed-length vector of integer genes.
struct Chromosome {
    std::vector<int> genes;

    Chromosome() = default;
    Chromosome(std::initializer_list<int> g) : genes(g) {}
    explicit Chromosome(std::vector<int> g) : genes(std::move(g)) {}

    std::size_t size() const noexcept { return genes.size(); }
    int& operator[](std::size_t i) { return genes[i]; }
    int operator[](std::size_t i) const { return genes[i]; }

    bool within(GeneBounds bounds) const noexcept;

    friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

/// Fixed-size ordered collection of chromosomes. Member k is printed as
/// 1-based "chromosome k+1" in all external output.
struct Population {
    std::vector<Chromosome> members;

    Population() = default;
    explicit Population(std::vector<Chromosome> m) : members(std::move(m)) {}

    std::size_t size() const noexcept { return members.size(); }
    Chromosome& operator[](std::size_t i) { return members[i]; }
    const Chromosome& operator[](std::size_t i) const { return members[i]; }

    /// Gene count per member; 0 for an empty population.
    std::size_t chromosome_length() const noexcept {
        return members.empty() ? 0 : members.front().size();
    }

    friend bool operator==(const Population&, const Population&) = default;
};

struct SeededMode {
    std::uint64_t seed = 0;
    friend bool operator==(const SeededMode&, const SeededMode&) = default;
};

struct ScriptedMode {
    std::string script_path;
    friend bool operator==(const ScriptedMode&, const ScriptedMode&) = default;
};

/// How a run obtains its RandomSource.
using RngMode = std::variant<SeededMode, ScriptedMode>;

/// Full parameter set for one run. Defaults match the shipped reference
/// instance (population 6, 50 generations, crossover 25%, mutation 10%,
/// four genes in [0,30]).
struct GaConfig {
    int population_size = 6;
    int generations = 50;
    double crossover_rate = 0.25;
    double mutation_rate = 0.1;
    GeneBounds bounds{0, 30};
    int chromosome_length = 4;
    RngMode rng_mode = SeededMode{0};

    /// Stop as soon as a zero-cost chromosome is known (off by default;
    /// the default termination is the fixed generation count).
    bool stop_on_zero = false;

    /// Reinsert the best-so-far chromosome over the worst member after each
    /// generation. Off by default; plain resampling can lose the incumbent.
    bool elitism = false;

    /// Throws ConfigError with an actionable message on any invalid field.
    void validate() const;
};

/// Complete record of one generation's intermediate states. All indices and
/// positions are 1-based, matching the external trace format.
struct GenerationTrace {
    int generation_index = 0;
    Population population_before;
    std::vector<std::int64_t> objective_values;
    std::vector<double> fitness_values;
    std::vector<double> probabilities;
    std::vector<double> cumulative;
    std::vector<double> selection_draws;
    std::vector<int> selected_indices;
    std::vector<double> crossover_draws;
    std::vector<int> crossover_parents;
    std::vector<int> cut_points;
    Population population_after_crossover;
    int mutation_count = 0;
    std::vector<int> mutation_positions;
    std::vector<int> mutation_values;
    Population population_after_mutation;
    std::int64_t best_objective_so_far = 0;

    friend bool operator==(const GenerationTrace&, const GenerationTrace&) = default;
};

/// Draws `length` genes in gene order, each uniform within bounds.
Chromosome random_chromosome(GeneBounds bounds, int length, RandomSource& src);

/// Draws population_size chromosomes in index order (chromosome-major,
/// gene-minor), consuming exactly N*L integer draws and no floats.
Population init_population(const GaConfig& config, RandomSource& src);

/// Bracketed zero-padded rendering, e.g. [02;21;18;03].
std::string to_display_string(const Chromosome& chrom);

} // namespace gasolve
