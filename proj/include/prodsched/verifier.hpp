#pragma once

#include <vector>

#include "prodsched/core.hpp"

namespace prodsched {

struct ValidationReport {
    bool continuous_per_object = false;
    bool agents_always_busy = false;
    bool simultaneous_finish = false;
    bool objects_complete = false;
    Rational duration;       // hours; max segment end
    bool optimal = false;    // all checks pass and duration equals H
    bool uniform = false;
    long long halt_count = 0;
    WorkRecord work_records; // hours per object per class

    bool all_checks() const {
        return continuous_per_object && agents_always_busy && simultaneous_finish &&
               objects_complete;
    }
};

// Full scheme validation. Accepts rational (non-grid) segment boundaries;
// malformed segments (bad indices, start >= end, overlapping work on one
// object, one agent on two objects at once) raise ValidationError.
ValidationReport validate(const ProblemSpec& spec, const Scheme& scheme);

// True iff every object is worked continuously and its per-class time equals
// k_i atomic units for every class i.
bool is_uniform(const ProblemSpec& spec, const Scheme& scheme);

// Class projection of an assignment matrix for two-class specs.
struct TypeMatrix {
    std::vector<std::vector<int>> classes;  // entries 1 or 2
    bool k_uniform = false;  // every row and column holds exactly k_1 class-1 entries

    // 0/1 view; `zero_class` picks which class maps to 0.
    std::vector<std::vector<int>> to_binary(int zero_class) const;
};

TypeMatrix type_matrix(const ProblemSpec& spec, const AssignmentMatrix& matrix);

struct GreedyResult {
    Scheme scheme;
    std::vector<long long> halts_au;
};

// Quota-driven simulation of the greedy rule: run, in whole atomic units,
// until some object would exceed its current type's quota, then perform a
// minimal quota-respecting reassignment. Independent of the trace-driven
// Euclidean construction; agents are laid out type 1 first.
GreedyResult greedy_simulate(long long r1, long long r2, const Rational& t1 = Rational(1),
                             const Rational& t2 = Rational(2));

} // namespace prodsched
