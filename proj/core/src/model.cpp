#include "gasolve/model.hpp"

#include <algorithm>
#include <cstdio>

#include "gasolve/errors.hpp"

namespace gasolve {

bool Chromosome::within(GeneBounds bounds) const noexcept {
    return std::all_of(genes.begin(), genes.end(),
                       [bounds](int g) { return bounds.contains(g); });
}

void GaConfig::validate() const {
    if (population_size < 2) {
        throw ConfigError("population_size must be >= 2, got " + std::to_string(population_size));
    }
    if (generations < 0) {
        throw ConfigError("generations must be >= 0, got " + std::to_string(generations));
    }
    if (chromosome_length < 2) {
        throw ConfigError("chromosome_length must be >= 2, got " + std::to_string(chromosome_length));
    }
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
        throw ConfigError("crossover_rate must be in [0,1], got " + std::to_string(crossover_rate));
    }
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
        throw ConfigError("mutation_rate must be in [0,1], got " + std::to_string(mutation_rate));
    }
    if (bounds.lo > bounds.hi) {
        throw ConfigError("gene bounds lo " + std::to_string(bounds.lo) + " > hi " +
                          std::to_string(bounds.hi));
    }
}

Chromosome random_chromosome(GeneBounds bounds, int length, RandomSource& src) {
    Chromosome chrom;
    chrom.genes.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
        chrom.genes.push_back(src.next_int_inclusive(bounds.lo, bounds.hi));
    }
    return chrom;
}

Population init_population(const GaConfig& config, RandomSource& src) {
    Population pop;
    pop.members.reserve(static_cast<std::size_t>(config.population_size));
    for (int i = 0; i < config.population_size; ++i) {
        pop.members.push_back(random_chromosome(config.bounds, config.chromosome_length, src));
    }
    return pop;
}

std::string to_display_string(const Chromosome& chrom) {
    std::string out = "[";
    for (std::size_t i = 0; i < chrom.genes.size(); ++i) {
        if (i > 0) out += ';';
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%02d", chrom.genes[i]);
        out += buf;
    }
    out += ']';
    return out;
}

} // namespace gasolve
