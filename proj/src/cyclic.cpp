#include "prodsched/cyclic.hpp"

#include <numeric>

#include "prodsched/harmonic.hpp"
#include "prodsched/verifier.hpp"

namespace prodsched {

AssignmentMatrix build_cyclic(const ProblemSpec& spec) {
    if (spec.num_objects() != spec.num_agents())
        throw ValidationError("build_cyclic needs p = n; use extend_to_p for p > n");
    const long long n = spec.num_agents();
    std::vector<std::vector<long long>> rows(static_cast<std::size_t>(n));
    for (long long i = 1; i <= n; ++i) {
        auto& row = rows[static_cast<std::size_t>(i - 1)];
        row.reserve(static_cast<std::size_t>(n));
        for (long long j = 1; j <= n; ++j) row.push_back((i + j - 2) % n + 1);
    }
    return AssignmentMatrix(std::move(rows), atomic_unit(spec));
}

Rational object_progress(const Scheme& scheme, const ProblemSpec& spec, long long object,
                         const Rational& time) {
    if (object < 1 || object > scheme.num_objects())
        throw ValidationError("unknown object index " + std::to_string(object));
    if (time.sign() < 0 || time > scheme.duration())
        throw ValidationError("time outside the scheme");
    Rational progress;
    for (const auto& seg : scheme.objects[static_cast<std::size_t>(object - 1)]) {
        const Rational& stop = time < seg.end ? time : seg.end;
        if (stop > seg.start)
            progress += (stop - seg.start) / spec.time_of_agent(seg.agent);
    }
    return progress;
}

std::pair<ProblemSpec, long long> gcd_reduce(const ProblemSpec& spec) {
    if (spec.num_objects() != spec.num_agents())
        throw ValidationError("gcd_reduce needs p = n");
    long long d = 0;
    for (const auto& c : spec.classes()) d = std::gcd(d, c.count);
    if (d <= 1) return {spec, 1};
    std::vector<AgentClass> reduced;
    reduced.reserve(spec.num_classes());
    for (const auto& c : spec.classes())
        reduced.push_back({c.completion_time, c.count / d});
    return {ProblemSpec(std::move(reduced)), d};
}

ProductionPlan extend_to_p(const ProblemSpec& spec, const Scheme& base) {
    const long long n = spec.num_agents();
    const long long p = spec.num_objects();

    ProblemSpec base_spec(spec.classes());  // p = n view of the same fleet
    if (!validate(base_spec, base).optimal)
        throw ValidationError("base scheme is not optimal for the n-object problem");

    ProductionPlan plan;
    plan.rounds = p / n;
    plan.base = base;
    const long long b = p % n;
    if (b == 0) return plan;

    // The b fastest agents: classes by ascending completion time, lowest
    // global ids first within a class.
    std::vector<std::size_t> order(spec.num_classes());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
        return spec.classes()[a].completion_time < spec.classes()[c].completion_time;
    });
    std::vector<long long> class_base(spec.num_classes() + 1, 0);
    for (std::size_t i = 0; i < spec.num_classes(); ++i)
        class_base[i + 1] = class_base[i] + spec.classes()[i].count;

    std::vector<AgentClass> picked_classes;
    std::vector<long long> global_ids;
    long long remaining = b;
    for (std::size_t idx : order) {
        if (remaining == 0) break;
        const auto& c = spec.classes()[idx];
        long long take = std::min(remaining, c.count);
        picked_classes.push_back({c.completion_time, take});
        for (long long k = 0; k < take; ++k) global_ids.push_back(class_base[idx] + k + 1);
        remaining -= take;
    }

    ProblemSpec remainder_spec(picked_classes);
    Scheme remainder = matrix_to_scheme(build_cyclic(remainder_spec));
    for (auto& timeline : remainder.objects)
        for (auto& seg : timeline)
            seg.agent = global_ids[static_cast<std::size_t>(seg.agent - 1)];
    plan.remainder = std::move(remainder);
    plan.remainder_spec = std::move(remainder_spec);
    return plan;
}

std::pair<ProblemSpec, Scheme> direct_sum(
    const std::vector<std::pair<ProblemSpec, Scheme>>& parts) {
    if (parts.empty()) throw ValidationError("direct_sum of no parts");

    const Rational h = optimum_time(parts.front().first);
    for (const auto& [part_spec, part_scheme] : parts) {
        if (part_spec.num_objects() != part_spec.num_agents())
            throw ValidationError("direct_sum parts need p = n");
        if (optimum_time(part_spec) != h)
            throw IncompatiblePartsError("harmonic optimum " +
                                         optimum_time(part_spec).to_string() +
                                         " differs from " + h.to_string());
        if (part_scheme.num_objects() != part_spec.num_agents())
            throw ValidationError("part scheme does not match its spec");
    }

    std::vector<AgentClass> classes;
    Scheme combined;
    long long offset = 0;
    for (const auto& [part_spec, part_scheme] : parts) {
        for (const auto& c : part_spec.classes()) classes.push_back(c);
        for (const auto& timeline : part_scheme.objects) {
            std::vector<Segment> shifted = timeline;
            for (auto& seg : shifted) seg.agent += offset;
            combined.objects.push_back(std::move(shifted));
        }
        offset += part_spec.num_agents();
    }
    return {ProblemSpec(std::move(classes)), std::move(combined)};
}

} // namespace prodsched
