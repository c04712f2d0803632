#include "gasolve/oracle.hpp"

#include <string>

#include "gasolve/errors.hpp"

namespace gasolve {

namespace {

constexpr std::uint64_t kScanGuard = 100'000'000;

bool domain_exceeds_guard(std::uint64_t base, std::size_t length) {
    std::uint64_t cells = 1;
    for (std::size_t i = 0; i < length; ++i) {
        if (cells > kScanGuard / base) {
            return true;
        }
        cells *= base;
    }
    return cells > kScanGuard;
}

} // namespace

SolutionSet enumerate_solutions(const LinearEqualityObjective& obj, GeneBounds bounds,
                                std::size_t length, std::optional<std::uint64_t> cap) {
    const auto& coeffs = obj.coefficients();
    if (length != coeffs.size()) {
        throw LengthMismatch("objective has " + std::to_string(coeffs.size()) +
                             " coefficients but enumeration length is " + std::to_string(length));
    }
    if (bounds.lo > bounds.hi) {
        throw ConfigError("gene bounds invalid: lo " + std::to_string(bounds.lo) + " > hi " +
                          std::to_string(bounds.hi));
    }
    const std::uint64_t base = static_cast<std::uint64_t>(bounds.hi) - bounds.lo + 1;
    if (!cap && domain_exceeds_guard(base, length)) {
        throw DomainTooLarge("domain of " + std::to_string(base) + "^" + std::to_string(length) +
                             " cells exceeds the " + std::to_string(kScanGuard) +
                             "-cell scan bound; rerun with a cap");
    }

    SolutionSet set;
    set.bounds = bounds;
    set.length = length;

    std::vector<int> x(length, bounds.lo);
    std::int64_t sum = 0;
    for (int c : coeffs) {
        sum += static_cast<std::int64_t>(c) * bounds.lo;
    }
    const std::int64_t span = bounds.hi - bounds.lo;

    bool done = false;
    while (!done) {
        if (cap && set.solutions.size() >= *cap) {
            break;
        }
        if (sum == obj.target()) {
            set.solutions.push_back(Chromosome{x});
        }
        done = true;
        for (std::size_t i = length; i-- > 0;) {
            if (x[i] < bounds.hi) {
                ++x[i];
                sum += coeffs[i];
                done = false;
                break;
            }
            x[i] = bounds.lo;
            sum -= static_cast<std::int64_t>(coeffs[i]) * span;
        }
    }

    set.count = set.solutions.size();
    return set;
}

bool verify_solution(const LinearEqualityObjective& obj, const Chromosome& chrom) {
    return obj.evaluate(chrom) == 0;
}

} // namespace gasolve
