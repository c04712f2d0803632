#pragma once

#include <cstdint>
#include <vector>

#include "gasolve/model.hpp"

namespace gasolve {

/// Maps a chromosome to a non-negative cost. Cost 0 means the chromosome
/// solves the problem exactly. Evaluation is deterministic and side-effect
/// free, so objectives are safe to call concurrently.
class ObjectiveContract {
public:
    virtual ~ObjectiveContract() = default;
    virtual std::int64_t evaluate(const Chromosome& chrom) const = 0;
};

/// |sum(coefficients[i] * genes[i]) - target|, accumulated in 64-bit integers.
class LinearEqualityObjective final : public ObjectiveContract {
public:
    LinearEqualityObjective(std::vector<int> coefficients, std::int64_t target)
        : coefficients_(std::move(coefficients)), target_(target) {}

    std::int64_t evaluate(const Chromosome& chrom) const override;

    const std::vector<int>& coefficients() const noexcept { return coefficients_; }
    std::int64_t target() const noexcept { return target_; }

private:
    std::vector<int> coefficients_;
    std::int64_t target_;
};

/// Free-function form of LinearEqualityObjective::evaluate.
/// Throws LengthMismatch if the chromosome length differs from the
/// coefficient count.
std::int64_t evaluate_linear(const LinearEqualityObjective& obj, const Chromosome& chrom);

/// Fitness transform 1/(1+cost), in (0,1]; strictly decreasing in cost.
/// The +1 keeps an exact solution (cost 0) from dividing by zero.
double fitness(std::int64_t cost);

/// Evaluates every member, in order.
std::vector<std::int64_t> evaluate_population(const ObjectiveContract& obj, const Population& pop);

} // namespace gasolve
