#include "prodsched/euclid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "prodsched/harmonic.hpp"

namespace prodsched {

long long EuclidTrace::r(std::size_t index) const {
    if (index < 1 || index > lines.size() + 2)
        throw ValidationError("trace index out of range");
    if (index <= lines.size()) return lines[index - 1].r_i;
    return index == lines.size() + 1 ? 1 : 0;
}

long long EuclidTrace::a(std::size_t index) const {
    if (index < 1 || index > lines.size())
        throw ValidationError("trace index out of range");
    return lines[index - 1].a_i;
}

EuclidTrace euclid_trace(long long r1, long long r2) {
    if (r2 < 1) throw ValidationError("r2 must be at least 1");
    if (r1 <= r2)
        throw ValidationError("arguments must satisfy r1 > r2 (got " + std::to_string(r1) +
                              ", " + std::to_string(r2) + ")");
    if (std::gcd(r1, r2) != 1) throw NotCoprimeError(r1, r2);

    EuclidTrace trace;
    trace.r1 = r1;
    trace.r2 = r2;
    long long a = r1, b = r2;
    while (true) {
        long long quotient = a / b, remainder = a % b;
        trace.lines.push_back({a, quotient, remainder});
        if (remainder == 0) break;
        a = b;
        b = remainder;
    }
    return trace;
}

long long halt_number(const EuclidTrace& trace) {
    long long h = 0;
    for (const auto& line : trace.lines) h += line.a_i;
    return h;
}

std::vector<long long> stage_lengths(const EuclidTrace& trace) {
    const std::size_t t = trace.stage_count();
    std::vector<long long> lengths;
    lengths.reserve(t);
    for (std::size_t i = 1; i <= t; ++i)
        lengths.push_back(trace.a(i) * trace.r(i + 1) + (i == t ? 1 : 0));
    return lengths;
}

std::vector<long long> halt_instants(const EuclidTrace& trace) {
    std::vector<long long> instants;
    long long start = 0;
    for (std::size_t i = 1; i <= trace.stage_count(); ++i) {
        for (long long j = 1; j <= trace.a(i); ++j)
            instants.push_back(start + j * trace.r(i + 1));
        start += trace.a(i) * trace.r(i + 1);
    }
    return instants;
}

std::vector<StageRecords> stage_records(const EuclidTrace& trace) {
    const std::size_t t = trace.stage_count();
    const long long r1 = trace.r1, r2 = trace.r2;
    std::vector<StageRecords> records;
    records.reserve(t);
    for (std::size_t i = 1; i <= t; ++i) {
        if (i == t) {
            // After the closing a.u. every object holds the full quota pair.
            records.push_back({{r1, r2}, {r1, r2}});
        } else if (i % 2 == 1) {
            records.push_back({{r1 - trace.r(i + 1) - trace.r(i + 2), r2},
                               {r1 - trace.r(i + 2), r2 - trace.r(i + 1)}});
        } else {
            records.push_back({{r1, r2 - trace.r(i + 1) - trace.r(i + 2)},
                               {r1 - trace.r(i + 1), r2 - trace.r(i + 2)}});
        }
    }
    return records;
}

namespace {

struct AgentRun {
    long long first = 0;
    long long last = 0;
    long long size() const { return last - first + 1; }
};

// Stage-by-stage simulation in the Type2First layout: agents 1..r2 carry the
// minority (type 2) class, objects start on their same-numbered agents. The
// active agents always form two contiguous index runs; the run holding S_0
// alternates sides as stages pass. Blocks S_1..S_a are carved from the end
// of the majority run adjacent to the minority run, the remainder S_{a+1}
// keeps the far end. Exchange j swaps the objects on the minority run with
// those on S_j's agents, pairing them in ascending agent order.
std::vector<std::vector<long long>> simulate_type2_first(const EuclidTrace& trace) {
    const long long n = trace.r1 + trace.r2;
    std::vector<long long> agent_of(static_cast<std::size_t>(n) + 1);
    std::vector<long long> object_on(static_cast<std::size_t>(n) + 1);
    for (long long i = 1; i <= n; ++i) agent_of[static_cast<std::size_t>(i)] = i;
    for (long long i = 1; i <= n; ++i) object_on[static_cast<std::size_t>(i)] = i;

    std::vector<std::vector<long long>> rows(
        static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
    long long now = 0;
    auto fill_until = [&](long long upto) {
        for (long long o = 1; o <= n; ++o)
            for (long long j = now; j < upto; ++j)
                rows[static_cast<std::size_t>(o - 1)][static_cast<std::size_t>(j)] =
                    agent_of[static_cast<std::size_t>(o)];
        now = upto;
    };

    AgentRun minority{1, trace.r2};
    AgentRun majority{trace.r2 + 1, n};
    const std::size_t t = trace.stage_count();
    for (std::size_t i = 1; i <= t; ++i) {
        const long long a = trace.a(i);
        const long long step = trace.r(i + 1);
        const bool minority_is_high = minority.first > majority.last;
        for (long long j = 1; j <= a; ++j) {
            fill_until(now + step);
            // S_j occupies the j-th block of `step` agents counted from the
            // majority run's end nearest the minority run.
            AgentRun block = minority_is_high
                                 ? AgentRun{majority.last - j * step + 1,
                                            majority.last - (j - 1) * step}
                                 : AgentRun{majority.first + (j - 1) * step,
                                            majority.first + j * step - 1};
            for (long long k = 0; k < step; ++k) {
                long long hot_agent = minority.first + k;
                long long block_agent = block.first + k;
                long long ox = object_on[static_cast<std::size_t>(hot_agent)];
                long long oy = object_on[static_cast<std::size_t>(block_agent)];
                std::swap(agent_of[static_cast<std::size_t>(ox)],
                          agent_of[static_cast<std::size_t>(oy)]);
                object_on[static_cast<std::size_t>(hot_agent)] = oy;
                object_on[static_cast<std::size_t>(block_agent)] = ox;
            }
        }
        if (i == t) {
            fill_until(now + 1);
        } else {
            AgentRun remainder = minority_is_high
                                     ? AgentRun{majority.first, majority.last - a * step}
                                     : AgentRun{majority.first + a * step, majority.last};
            majority = minority;
            minority = remainder;
        }
    }
    return rows;
}

} // namespace

ProblemSpec euclidean_spec(long long r1, long long r2, AgentOrder order, const Rational& t1,
                           const Rational& t2) {
    if (t1 == t2) throw ValidationError("the two agent types must have distinct times");
    if (order == AgentOrder::Type2First)
        return ProblemSpec({{t2, r2}, {t1, r1}});
    return ProblemSpec({{t1, r1}, {t2, r2}});
}

EuclideanScheme build_euclidean(long long r1, long long r2, AgentOrder order,
                                const Rational& t1, const Rational& t2) {
    EuclidTrace trace = euclid_trace(r1, r2);
    const long long n = r1 + r2;

    std::vector<std::vector<long long>> rows = simulate_type2_first(trace);
    if (order == AgentOrder::Type1First) {
        // Mirror both labellings: agent k -> n+1-k, object i -> n+1-i. This
        // keeps object i starting on agent i while putting type 1 first.
        std::vector<std::vector<long long>> mirrored(rows.size());
        for (long long i = 0; i < n; ++i) {
            auto& row = mirrored[static_cast<std::size_t>(i)];
            row = rows[static_cast<std::size_t>(n - 1 - i)];
            for (auto& agent : row) agent = n + 1 - agent;
        }
        rows = std::move(mirrored);
    }

    ProblemSpec spec = euclidean_spec(r1, r2, order, t1, t2);
    AssignmentMatrix matrix(std::move(rows), atomic_unit(spec));

    std::vector<StageReport> stages;
    const auto lengths = stage_lengths(trace);
    const auto records = stage_records(trace);
    long long start = 0;
    for (std::size_t i = 1; i <= trace.stage_count(); ++i) {
        StageReport report;
        report.stage = i;
        report.length_au = lengths[i - 1];
        for (long long j = 1; j <= trace.a(i); ++j)
            report.halts_at.push_back(start + j * trace.r(i + 1));
        report.passive_record = records[i - 1].passive;
        report.active_record = records[i - 1].active;
        stages.push_back(std::move(report));
        start += lengths[i - 1];
    }

    return {std::move(matrix), std::move(stages), std::move(trace), std::move(spec)};
}

FibonacciReport fibonacci_analysis(long long p) {
    if (p < 2) throw ValidationError("fibonacci_analysis needs p >= 2");
    if (p > 87) throw CapacityError("fibonacci numbers beyond f_89 overflow 64 bits");

    long long fp = 1, fp1 = 1;  // f_1, f_2
    for (long long i = 2; i <= p; ++i) {
        long long next = fp + fp1;
        fp = fp1;
        fp1 = next;
    }

    FibonacciReport report;
    report.p = p;
    report.r1 = fp1;
    report.r2 = fp;
    report.n = fp + fp1;
    EuclidTrace trace = euclid_trace(report.r1, report.r2);
    report.h = halt_number(trace);
    report.halts = halt_instants(trace);
    report.log_phi_n = std::log(static_cast<double>(report.n)) / std::log((1.0 + std::sqrt(5.0)) / 2.0);
    report.bound_ok = static_cast<double>(report.h) <= report.log_phi_n;
    return report;
}

HaltStatistics halt_statistics(long long n) {
    if (n < 3) throw ValidationError("halt_statistics needs n >= 3");
    HaltStatistics stats;
    stats.n = n;
    long long total = 0;
    for (long long r1 = n - 1; r1 > n - r1; --r1) {
        long long r2 = n - r1;
        if (std::gcd(r1, r2) != 1) continue;
        long long h = halt_number(euclid_trace(r1, r2));
        stats.per_pair.emplace_back(r1, r2, h);
        total += h;
    }
    if (stats.per_pair.empty())
        throw ValidationError("no coprime pair sums to " + std::to_string(n));
    stats.mean = Rational(total) / Rational(static_cast<long long>(stats.per_pair.size()));
    return stats;
}

} // namespace prodsched
