#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "prodsched/core.hpp"

namespace prodsched {

// The n-cyclic scheme C_n: at the end of every atomic unit each agent hands
// its object to the next agent around the circle. Requires p = n.
AssignmentMatrix build_cyclic(const ProblemSpec& spec);

// Proportion of `object` completed at `time` hours into the scheme.
Rational object_progress(const Scheme& scheme, const ProblemSpec& spec, long long object,
                         const Rational& time);

// Divides all class counts by their gcd d, shrinking an n-object problem to
// an n/d-object problem (d-sets of objects acting as one). Returns the
// reduced spec and d. Requires p = n.
std::pair<ProblemSpec, long long> gcd_reduce(const ProblemSpec& spec);

// Production of p = rounds * n + b objects: the base scheme repeated, then
// an optional cyclic scheme over the b fastest agents. Repetition stays
// symbolic since the schedule is periodic.
struct ProductionPlan {
    long long rounds = 1;
    Scheme base;
    std::optional<Scheme> remainder;        // present iff p mod n > 0
    std::optional<ProblemSpec> remainder_spec;
};

// Requires `base` to verify as optimal for the n-object version of `spec`.
ProductionPlan extend_to_p(const ProblemSpec& spec, const Scheme& base);

// Runs independently optimal sub-schemes in parallel over the common [0, H].
// All parts must share the same harmonic optimum; agent and object indices
// are re-based part by part in input order.
std::pair<ProblemSpec, Scheme> direct_sum(
    const std::vector<std::pair<ProblemSpec, Scheme>>& parts);

} // namespace prodsched
