#include "prodsched/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "prodsched/harmonic.hpp"

namespace prodsched {

namespace {

std::vector<Segment> sorted_segments(const std::vector<Segment>& segments) {
    std::vector<Segment> out = segments;
    std::sort(out.begin(), out.end(),
              [](const Segment& a, const Segment& b) { return a.start < b.start; });
    return out;
}

void check_well_formed(const ProblemSpec& spec, const Scheme& scheme) {
    if (scheme.num_objects() != spec.num_agents())
        throw ValidationError("scheme must cover exactly n objects");
    for (const auto& timeline : scheme.objects) {
        for (const auto& seg : timeline) {
            if (seg.agent < 1 || seg.agent > spec.num_agents())
                throw ValidationError("segment references unknown agent " +
                                      std::to_string(seg.agent));
            if (seg.start.sign() < 0 || seg.start >= seg.end)
                throw ValidationError("segment must satisfy 0 <= start < end");
        }
        auto sorted = sorted_segments(timeline);
        for (std::size_t k = 0; k + 1 < sorted.size(); ++k)
            if (sorted[k].end > sorted[k + 1].start)
                throw ValidationError("object worked by two agents at once");
    }
}

bool timeline_continuous(const std::vector<Segment>& sorted) {
    if (sorted.empty()) return false;
    if (!sorted.front().start.is_zero()) return false;
    for (std::size_t k = 0; k + 1 < sorted.size(); ++k)
        if (sorted[k].end != sorted[k + 1].start) return false;
    return true;
}

} // namespace

ValidationReport validate(const ProblemSpec& spec, const Scheme& scheme) {
    check_well_formed(spec, scheme);
    const long long n = spec.num_agents();

    ValidationReport report;
    report.continuous_per_object = true;
    report.objects_complete = true;
    report.work_records.unit = WorkUnit::Hours;
    report.duration = scheme.duration();

    std::vector<std::vector<Segment>> by_agent(static_cast<std::size_t>(n));
    std::set<Rational> exchange_instants;
    report.simultaneous_finish = true;

    for (const auto& timeline : scheme.objects) {
        auto sorted = sorted_segments(timeline);
        if (!timeline_continuous(sorted)) report.continuous_per_object = false;

        Rational progress;
        std::map<std::size_t, Rational> record;
        for (const auto& seg : sorted) {
            Rational hours = seg.end - seg.start;
            progress += hours / spec.time_of_agent(seg.agent);
            record[spec.class_of_agent(seg.agent)] += hours;
            by_agent[static_cast<std::size_t>(seg.agent - 1)].push_back(seg);
        }
        if (progress != Rational(1)) report.objects_complete = false;
        if (sorted.empty() || sorted.back().end != report.duration)
            report.simultaneous_finish = false;
        for (std::size_t k = 0; k + 1 < sorted.size(); ++k)
            if (sorted[k].agent != sorted[k + 1].agent)
                exchange_instants.insert(sorted[k + 1].start);
        report.work_records.per_object.push_back(std::move(record));
    }

    report.agents_always_busy = true;
    for (auto& segments : by_agent) {
        std::sort(segments.begin(), segments.end(),
                  [](const Segment& a, const Segment& b) { return a.start < b.start; });
        for (std::size_t k = 0; k + 1 < segments.size(); ++k)
            if (segments[k].end > segments[k + 1].start)
                throw ValidationError("agent works two objects at once");
        bool busy = !segments.empty() && segments.front().start.is_zero() &&
                    segments.back().end == report.duration;
        for (std::size_t k = 0; busy && k + 1 < segments.size(); ++k)
            if (segments[k].end != segments[k + 1].start) busy = false;
        if (!busy) report.agents_always_busy = false;
    }

    report.halt_count = static_cast<long long>(exchange_instants.size());
    report.optimal = report.all_checks() && report.duration == optimum_time(spec);
    report.uniform = is_uniform(spec, scheme);
    return report;
}

bool is_uniform(const ProblemSpec& spec, const Scheme& scheme) {
    check_well_formed(spec, scheme);
    const Rational au = atomic_unit(spec);
    for (const auto& timeline : scheme.objects) {
        auto sorted = sorted_segments(timeline);
        if (!timeline_continuous(sorted)) return false;
        std::map<std::size_t, Rational> record;
        for (const auto& seg : sorted)
            record[spec.class_of_agent(seg.agent)] += seg.end - seg.start;
        for (std::size_t c = 1; c <= spec.num_classes(); ++c) {
            Rational quota = Rational(spec.classes()[c - 1].count) * au;
            auto it = record.find(c);
            Rational worked = it == record.end() ? Rational(0) : it->second;
            if (worked != quota) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> TypeMatrix::to_binary(int zero_class) const {
    if (zero_class != 1 && zero_class != 2)
        throw ValidationError("zero_class must be 1 or 2");
    std::vector<std::vector<int>> out = classes;
    for (auto& row : out)
        for (auto& cell : row) cell = cell == zero_class ? 0 : 1;
    return out;
}

TypeMatrix type_matrix(const ProblemSpec& spec, const AssignmentMatrix& matrix) {
    if (spec.num_classes() != 2)
        throw UnsupportedError("type_matrix is defined for two-class specs only");
    if (matrix.size() != spec.num_agents())
        throw ValidationError("matrix size does not match the spec");

    const long long n = matrix.size();
    const long long k1 = spec.classes()[0].count;
    TypeMatrix result;
    result.classes.assign(static_cast<std::size_t>(n),
                          std::vector<int>(static_cast<std::size_t>(n), 0));
    result.k_uniform = true;
    std::vector<long long> column_count(static_cast<std::size_t>(n), 0);
    for (long long i = 1; i <= n; ++i) {
        long long row_count = 0;
        for (long long j = 1; j <= n; ++j) {
            int cls = static_cast<int>(spec.class_of_agent(matrix.at(i, j)));
            result.classes[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                cls;
            if (cls == 1) {
                ++row_count;
                ++column_count[static_cast<std::size_t>(j - 1)];
            }
        }
        if (row_count != k1) result.k_uniform = false;
    }
    for (long long count : column_count)
        if (count != k1) result.k_uniform = false;
    return result;
}

GreedyResult greedy_simulate(long long r1, long long r2, const Rational& t1,
                             const Rational& t2) {
    if (r2 < 1 || r1 <= r2) throw ValidationError("greedy_simulate needs r1 > r2 >= 1");
    if (std::gcd(r1, r2) != 1) throw NotCoprimeError(r1, r2);
    if (t1 == t2) throw ValidationError("the two agent types must have distinct times");

    const long long n = r1 + r2;
    ProblemSpec spec({{t1, r1}, {t2, r2}});  // agents 1..r1 are type 1
    const Rational au = atomic_unit(spec);
    auto type_of = [&](long long agent) { return agent <= r1 ? 1 : 2; };

    std::vector<long long> agent_of(static_cast<std::size_t>(n) + 1);
    std::vector<long long> worked1(static_cast<std::size_t>(n) + 1, 0);
    std::vector<long long> worked2(static_cast<std::size_t>(n) + 1, 0);
    std::vector<long long> seg_start(static_cast<std::size_t>(n) + 1, 0);
    for (long long o = 1; o <= n; ++o) agent_of[static_cast<std::size_t>(o)] = o;

    GreedyResult result;
    result.scheme.objects.resize(static_cast<std::size_t>(n));
    auto close_segment = [&](long long object, long long tau) {
        result.scheme.objects[static_cast<std::size_t>(object - 1)].push_back(
            {agent_of[static_cast<std::size_t>(object)],
             Rational(seg_start[static_cast<std::size_t>(object)]) * au, Rational(tau) * au});
        seg_start[static_cast<std::size_t>(object)] = tau;
    };

    long long tau = 0;
    while (tau < n) {
        long long room = n;
        for (long long o = 1; o <= n; ++o) {
            long long agent = agent_of[static_cast<std::size_t>(o)];
            long long left = type_of(agent) == 1 ? r1 - worked1[static_cast<std::size_t>(o)]
                                                 : r2 - worked2[static_cast<std::size_t>(o)];
            room = std::min(room, left);
        }
        long long step = std::min(room, n - tau);
        if (step <= 0) throw ValidationError("greedy simulation stalled");
        for (long long o = 1; o <= n; ++o) {
            long long agent = agent_of[static_cast<std::size_t>(o)];
            (type_of(agent) == 1 ? worked1 : worked2)[static_cast<std::size_t>(o)] += step;
        }
        tau += step;
        if (tau == n) break;

        // Forced halt: objects at quota on their current type must move.
        result.halts_au.push_back(tau);
        std::vector<long long> forced1, forced2;  // on type 1 / on type 2
        for (long long o = 1; o <= n; ++o) {
            long long agent = agent_of[static_cast<std::size_t>(o)];
            if (type_of(agent) == 1 && worked1[static_cast<std::size_t>(o)] == r1)
                forced1.push_back(o);
            if (type_of(agent) == 2 && worked2[static_cast<std::size_t>(o)] == r2)
                forced2.push_back(o);
        }

        auto by_agent = [&](long long a, long long b) {
            return agent_of[static_cast<std::size_t>(a)] < agent_of[static_cast<std::size_t>(b)];
        };
        // Balance the swap with volunteers that still have room on the other
        // type, lowest agent index first.
        std::vector<long long> to_type1 = forced2, to_type2 = forced1;
        if (forced2.size() > forced1.size()) {
            std::vector<long long> candidates;
            for (long long o = 1; o <= n; ++o) {
                long long agent = agent_of[static_cast<std::size_t>(o)];
                if (type_of(agent) == 1 && worked1[static_cast<std::size_t>(o)] < r1 &&
                    worked2[static_cast<std::size_t>(o)] < r2)
                    candidates.push_back(o);
            }
            std::sort(candidates.begin(), candidates.end(), by_agent);
            if (candidates.size() < forced2.size() - forced1.size())
                throw ValidationError("greedy simulation ran out of quota room");
            candidates.resize(forced2.size() - forced1.size());
            to_type2.insert(to_type2.end(), candidates.begin(), candidates.end());
        } else if (forced1.size() > forced2.size()) {
            std::vector<long long> candidates;
            for (long long o = 1; o <= n; ++o) {
                long long agent = agent_of[static_cast<std::size_t>(o)];
                if (type_of(agent) == 2 && worked2[static_cast<std::size_t>(o)] < r2 &&
                    worked1[static_cast<std::size_t>(o)] < r1)
                    candidates.push_back(o);
            }
            std::sort(candidates.begin(), candidates.end(), by_agent);
            if (candidates.size() < forced1.size() - forced2.size())
                throw ValidationError("greedy simulation ran out of quota room");
            candidates.resize(forced1.size() - forced2.size());
            to_type1.insert(to_type1.end(), candidates.begin(), candidates.end());
        }

        std::vector<long long> slots1, slots2;  // freed agents by the movers
        for (long long o : to_type1) slots2.push_back(agent_of[static_cast<std::size_t>(o)]);
        for (long long o : to_type2) slots1.push_back(agent_of[static_cast<std::size_t>(o)]);
        std::sort(slots1.begin(), slots1.end());
        std::sort(slots2.begin(), slots2.end());
        std::sort(to_type1.begin(), to_type1.end(), by_agent);
        std::sort(to_type2.begin(), to_type2.end(), by_agent);

        for (std::size_t k = 0; k < to_type1.size(); ++k) {
            close_segment(to_type1[k], tau);
            agent_of[static_cast<std::size_t>(to_type1[k])] = slots1[k];
        }
        for (std::size_t k = 0; k < to_type2.size(); ++k) {
            close_segment(to_type2[k], tau);
            agent_of[static_cast<std::size_t>(to_type2[k])] = slots2[k];
        }
    }
    for (long long o = 1; o <= n; ++o) close_segment(o, n);
    return result;
}

} // namespace prodsched
