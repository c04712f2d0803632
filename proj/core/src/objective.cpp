#include "gasolve/objective.hpp"

#include <cassert>
#include <cstdlib>
#include <string>

#include "gasolve/errors.hpp"

namespace gasolve {

std::int64_t LinearEqualityObjective::evaluate(const Chromosome& chrom) const {
    if (chrom.genes.size() != coefficients_.size()) {
        throw LengthMismatch("objective has " + std::to_string(coefficients_.size()) +
                             " coefficients but chromosome has " +
                             std::to_string(chrom.genes.size()) + " genes");
    }
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        sum += static_cast<std::int64_t>(coefficients_[i]) * chrom.genes[i];
    }
    return std::llabs(sum - target_);
}

std::int64_t evaluate_linear(const LinearEqualityObjective& obj, const Chromosome& chrom) {
    return obj.evaluate(chrom);
}

double fitness(std::int64_t cost) {
    assert(cost >= 0);
    return 1.0 / (1.0 + static_cast<double>(cost));
}

std::vector<std::int64_t> evaluate_population(const ObjectiveContract& obj, const Population& pop) {
    std::vector<std::int64_t> costs;
    costs.reserve(pop.size());
    for (const auto& member : pop.members) {
        costs.push_back(obj.evaluate(member));
    }
    return costs;
}

} // namespace gasolve
