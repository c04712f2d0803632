#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gasolve/model.hpp"
#include "gasolve/objective.hpp"

namespace gasolve {

/// Result of a brute-force scan over the full gene domain.
///
/// `count` is the number of stored solutions, so with a `cap` it reflects
/// only the solutions kept before the scan stopped.
struct SolutionSet {
    std::vector<Chromosome> solutions; ///< zero-cost vectors, lexicographic order
    std::uint64_t count = 0;           ///< == solutions.size()
    GeneBounds bounds{0, 0};
    std::size_t length = 0;
};

/// Scans the whole domain [lo,hi]^length in lexicographic order and collects
/// every chromosome with cost zero.
///
/// Uncapped scans refuse domains larger than 10^8 cells (DomainTooLarge);
/// passing `cap` lifts the guard and stops the scan once `cap` solutions are
/// stored. Throws LengthMismatch if `length` disagrees with the objective.
SolutionSet enumerate_solutions(const LinearEqualityObjective& obj, GeneBounds bounds,
                                std::size_t length,
                                std::optional<std::uint64_t> cap = std::nullopt);

/// True iff the chromosome hits the objective exactly (cost zero).
bool verify_solution(const LinearEqualityObjective& obj, const Chromosome& chrom);

} // namespace gasolve
