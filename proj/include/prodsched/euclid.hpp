#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "prodsched/core.hpp"

namespace prodsched {

// One division line r_i = a_i * r_{i+1} + r_{i+2}.
struct EuclidLine {
    long long r_i = 0;
    long long a_i = 0;
    long long r_next = 0;  // r_{i+2}; zero on the last line
};

// The full division chain for a coprime pair r1 > r2 >= 1; stage i of the
// Euclidean scheme corresponds to line i. The single-line case (r2 = 1) is
// the degenerate trace of the pair (n-1, 1).
struct EuclidTrace {
    long long r1 = 0;
    long long r2 = 0;
    std::vector<EuclidLine> lines;

    std::size_t stage_count() const { return lines.size(); }  // t
    // r_1 .. r_{t+2} with the conventions r_{t+1} = 1, r_{t+2} = 0.
    long long r(std::size_t index) const;
    long long a(std::size_t index) const;  // a_1 .. a_t
};

EuclidTrace euclid_trace(long long r1, long long r2);

// h = sum of the a_i.
long long halt_number(const EuclidTrace& trace);

// a_i * r_{i+1} for i < t and a_t + 1 for the final stage; sums to n.
std::vector<long long> stage_lengths(const EuclidTrace& trace);

// Absolute a.u. instants of all halts, stage by stage.
std::vector<long long> halt_instants(const EuclidTrace& trace);

// Work record pair in a.u.: time worked by type-1 and type-2 agents.
struct RecordPair {
    long long type1 = 0;
    long long type2 = 0;
    friend bool operator==(const RecordPair&, const RecordPair&) = default;
};

struct StageRecords {
    RecordPair passive;  // objects that become passive at the stage's end
    RecordPair active;   // objects still being exchanged
};

// Closed-form records at the end of each stage. For odd i the passive pair
// is (r1 - r_{i+1} - r_{i+2}, r2) and the active pair (r1 - r_{i+2},
// r2 - r_{i+1}); even stages mirror the roles. The final stage reports
// (r1, r2) for everything, after the closing atomic unit.
std::vector<StageRecords> stage_records(const EuclidTrace& trace);

struct StageReport {
    std::size_t stage = 1;  // 1-based
    long long length_au = 0;
    std::vector<long long> halts_at;  // absolute a.u.
    RecordPair passive_record;
    RecordPair active_record;
};

// Which agent ids carry the majority (type 1) class: first r1 ids or last.
enum class AgentOrder { Type1First, Type2First };

struct EuclideanScheme {
    AssignmentMatrix matrix;
    std::vector<StageReport> stages;
    EuclidTrace trace;
    ProblemSpec spec;
};

// Builds E(r1, r2) with completion times t1, t2 for the two agent types.
// Object i starts on agent i; under Type2First the layout matches the
// stage-by-stage block construction directly, under Type1First agents and
// objects are relabelled by the index reversal k -> n+1-k.
EuclideanScheme build_euclidean(long long r1, long long r2,
                                AgentOrder order = AgentOrder::Type1First,
                                const Rational& t1 = Rational(1),
                                const Rational& t2 = Rational(2));

// The two-class spec underlying E(r1, r2) under the given labelling.
ProblemSpec euclidean_spec(long long r1, long long r2, AgentOrder order,
                           const Rational& t1 = Rational(1),
                           const Rational& t2 = Rational(2));

struct FibonacciReport {
    long long p = 0;
    long long r1 = 0;  // f_{p+1}
    long long r2 = 0;  // f_p
    long long n = 0;   // f_{p+2}
    long long h = 0;
    std::vector<long long> halts;
    double log_phi_n = 0.0;
    bool bound_ok = false;  // h <= log_phi(n); small-p exceptions are flagged, not fatal
};

// Halt analytics of E(f_{p+1}, f_p); works at trace level so large p stays
// cheap. Requires 2 <= p <= 87 (completion counts fit in 64 bits).
FibonacciReport fibonacci_analysis(long long p);

struct HaltStatistics {
    long long n = 0;
    // (r1, r2, h) over all coprime pairs with r1 > r2 >= 1, r1 + r2 = n.
    std::vector<std::tuple<long long, long long, long long>> per_pair;
    Rational mean;
};

HaltStatistics halt_statistics(long long n);

} // namespace prodsched
