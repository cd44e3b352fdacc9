#pragma once

// Shared fixtures and small oracles used across the test suites.

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "prodsched/core.hpp"
#include "prodsched/euclid.hpp"
#include "prodsched/harmonic.hpp"

namespace testutil {

using namespace prodsched;

// Figure-style 13x13 agent grid of E(8,5) with the five minority agents
// listed first, transcribed cell by cell.
inline std::vector<std::vector<long long>> fibonacci5_grid() {
    return {
        {1, 1, 1, 1, 1, 6, 6, 6, 6, 6, 6, 6, 6},
        {2, 2, 2, 2, 2, 7, 7, 7, 7, 7, 7, 7, 7},
        {3, 3, 3, 3, 3, 8, 8, 8, 8, 8, 8, 8, 8},
        {4, 4, 4, 4, 4, 9, 9, 9, 9, 9, 9, 9, 9},
        {5, 5, 5, 5, 5, 10, 10, 10, 10, 10, 10, 10, 10},
        {6, 6, 6, 6, 6, 1, 1, 1, 1, 1, 11, 11, 11},
        {7, 7, 7, 7, 7, 2, 2, 2, 2, 2, 12, 12, 12},
        {8, 8, 8, 8, 8, 3, 3, 3, 11, 11, 1, 1, 13},
        {9, 9, 9, 9, 9, 4, 4, 4, 12, 12, 2, 13, 1},
        {10, 10, 10, 10, 10, 5, 5, 5, 13, 13, 13, 2, 2},
        {11, 11, 11, 11, 11, 11, 11, 11, 3, 3, 3, 3, 3},
        {12, 12, 12, 12, 12, 12, 12, 12, 4, 4, 4, 4, 4},
        {13, 13, 13, 13, 13, 13, 13, 13, 5, 5, 5, 5, 5},
    };
}

// Per-object (type1, type2) a.u. counts over the first `prefix_au` columns.
// The majority class is the one with the larger agent count.
inline std::vector<std::pair<long long, long long>> record_prefix(
    const AssignmentMatrix& matrix, const ProblemSpec& spec, long long prefix_au) {
    std::vector<std::pair<long long, long long>> records;
    const bool class1_is_majority = spec.classes()[0].count >= spec.classes()[1].count;
    for (long long i = 1; i <= matrix.size(); ++i) {
        long long majority = 0;
        for (long long j = 1; j <= prefix_au; ++j) {
            std::size_t cls = spec.class_of_agent(matrix.at(i, j));
            if ((cls == 1) == class1_is_majority) ++majority;
        }
        records.emplace_back(majority, prefix_au - majority);
    }
    return records;
}

// Interior a.u. instants at which the object's agent changes.
inline std::vector<long long> change_instants(const AssignmentMatrix& matrix,
                                              long long object) {
    std::vector<long long> instants;
    for (long long j = 1; j < matrix.size(); ++j)
        if (matrix.at(object, j) != matrix.at(object, j + 1)) instants.push_back(j);
    return instants;
}

// Random spec with distinct rational class times; n stays <= max_agents.
inline ProblemSpec random_spec(std::mt19937_64& rng, std::size_t max_classes = 4,
                               long long max_agents = 20) {
    std::uniform_int_distribution<std::size_t> class_count(1, max_classes);
    std::uniform_int_distribution<long long> small(1, 12);
    const std::size_t m = class_count(rng);
    std::set<Rational> seen;
    std::vector<AgentClass> classes;
    while (classes.size() < m) {
        Rational time{BigInt(small(rng)), BigInt(small(rng))};
        if (!seen.insert(time).second) continue;
        classes.push_back({time, 1});
    }
    long long budget = max_agents - static_cast<long long>(m);
    std::uniform_int_distribution<long long> extra(0, 5);
    for (auto& c : classes) {
        long long add = std::min(extra(rng), budget);
        c.count += add;
        budget -= add;
    }
    return ProblemSpec(std::move(classes));
}

inline std::vector<std::pair<long long, long long>> coprime_pairs_up_to(long long max_n) {
    std::vector<std::pair<long long, long long>> pairs;
    for (long long n = 3; n <= max_n; ++n)
        for (long long r2 = 1; 2 * r2 < n; ++r2)
            if (std::gcd(n - r2, r2) == 1) pairs.emplace_back(n - r2, r2);
    return pairs;
}

} // namespace testutil
