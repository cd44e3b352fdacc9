#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "prodsched/core.hpp"

namespace prodsched {

// |times| / sum(1/t). All entries must be positive.
Rational harmonic_mean(const std::vector<Rational>& times);

// Harmonic optimum H = n (sum k_i / t_i)^-1; equals the harmonic mean of the
// expanded n-element time list.
Rational optimum_time(const ProblemSpec& spec);

// H / n = R^-1 hours, the grid on which canonical schemes exchange.
Rational atomic_unit(const ProblemSpec& spec);

// Proportion of the build produced by each class: p_j = k_j / (t_j R).
// Sums to 1.
std::vector<Rational> build_proportions(const ProblemSpec& spec);

// All ordered-up pairs x <= y of positive integers with harmonic mean 2m,
// one per divisor d <= m of m^2: (d + m, m^2/d + m).
std::vector<std::pair<long long, long long>> harmonic_pairs(long long m);

// A partition of a time list into sub-lists that all share `mean` as their
// harmonic mean.
struct HarmonicPartition {
    std::vector<std::vector<Rational>> parts;
    Rational mean;
};

inline constexpr std::size_t kDefaultSplitBound = 24;

// All unordered two-part splits {U, T\U} with H(U) = H(T), U a proper
// nonempty sub-list. Enumeration is exponential; lists longer than
// `max_elements` are rejected with a capacity error. Each returned partition
// has exactly two parts, the first containing the list's first element;
// results are ordered lexicographically by that part's sorted contents.
std::vector<HarmonicPartition> split_search(const std::vector<Rational>& times,
                                            std::size_t max_elements = kDefaultSplitBound);

// Recursively applies split_search, always taking the lexicographically
// least available split, until every part is irreducible.
HarmonicPartition irreducible_representation(const std::vector<Rational>& times,
                                             std::size_t max_elements = kDefaultSplitBound);

} // namespace prodsched
