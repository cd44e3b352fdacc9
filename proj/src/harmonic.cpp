#include "prodsched/harmonic.hpp"

#include <algorithm>
#include <set>

namespace prodsched {

Rational harmonic_mean(const std::vector<Rational>& times) {
    if (times.empty()) throw ValidationError("harmonic mean of an empty list");
    Rational reciprocal_sum;
    for (const auto& t : times) {
        if (t.sign() <= 0) throw ValidationError("harmonic mean needs positive entries");
        reciprocal_sum += t.reciprocal();
    }
    return Rational(static_cast<long long>(times.size())) / reciprocal_sum;
}

Rational optimum_time(const ProblemSpec& spec) {
    return Rational(spec.num_agents()) / spec.rate_sum();
}

Rational atomic_unit(const ProblemSpec& spec) {
    return spec.rate_sum().reciprocal();
}

std::vector<Rational> build_proportions(const ProblemSpec& spec) {
    Rational rate = spec.rate_sum();
    std::vector<Rational> proportions;
    proportions.reserve(spec.num_classes());
    for (const auto& c : spec.classes())
        proportions.push_back(Rational(c.count) / (c.completion_time * rate));
    return proportions;
}

std::vector<std::pair<long long, long long>> harmonic_pairs(long long m) {
    if (m < 1) throw ValidationError("harmonic_pairs needs m >= 1");
    std::vector<std::pair<long long, long long>> pairs;
    const long long square = m * m;
    for (long long d = 1; d <= m; ++d) {
        if (square % d == 0) pairs.emplace_back(d + m, square / d + m);
    }
    return pairs;
}

namespace {

// Clears denominators so subset means compare through integer sums: with
// w_i = D/t_i for D = lcm of the reciprocal denominators, H(U) = H(T) iff
// |U| * W_T == n * W_U.
std::vector<BigInt> integer_weights(const std::vector<Rational>& times) {
    BigInt lcm = 1;
    for (const auto& t : times) {
        Rational r = t.reciprocal();
        lcm = boost::multiprecision::lcm(lcm, r.den());
    }
    std::vector<BigInt> weights;
    weights.reserve(times.size());
    for (const auto& t : times) {
        Rational r = t.reciprocal();
        weights.push_back(r.num() * (lcm / r.den()));
    }
    return weights;
}

std::vector<Rational> sorted(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    return values;
}

} // namespace

std::vector<HarmonicPartition> split_search(const std::vector<Rational>& times,
                                            std::size_t max_elements) {
    const std::size_t n = times.size();
    if (n == 0) throw ValidationError("split_search on an empty list");
    if (n > max_elements)
        throw CapacityError("list of " + std::to_string(n) +
                            " elements exceeds the enumeration bound of " +
                            std::to_string(max_elements));
    for (const auto& t : times)
        if (t.sign() <= 0) throw ValidationError("split_search needs positive entries");

    const std::vector<BigInt> weights = integer_weights(times);
    BigInt total = 0;
    for (const auto& w : weights) total += w;
    const Rational mean = harmonic_mean(times);

    // Element 0 always goes to U, which kills the U/complement symmetry.
    struct Split {
        std::vector<Rational> u, v;
    };
    std::vector<Split> found;
    std::set<std::pair<std::vector<Rational>, std::vector<Rational>>> seen;
    const std::uint64_t masks = n >= 2 ? (1ULL << (n - 1)) : 1;
    for (std::uint64_t mask = 0; mask + 1 < masks; ++mask) {
        BigInt weight_u = weights[0];
        std::size_t size_u = 1;
        for (std::size_t i = 1; i < n; ++i) {
            if (mask >> (i - 1) & 1) {
                weight_u += weights[i];
                ++size_u;
            }
        }
        if (BigInt(size_u) * total != BigInt(n) * weight_u) continue;

        Split split;
        for (std::size_t i = 0; i < n; ++i) {
            bool in_u = i == 0 || (mask >> (i - 1) & 1);
            (in_u ? split.u : split.v).push_back(times[i]);
        }
        auto key = std::make_pair(sorted(split.u), sorted(split.v));
        if (seen.insert(key).second) found.push_back(std::move(split));
    }

    std::sort(found.begin(), found.end(), [](const Split& a, const Split& b) {
        return lexicographic_less(sorted(a.u), sorted(b.u));
    });

    std::vector<HarmonicPartition> partitions;
    partitions.reserve(found.size());
    for (auto& split : found)
        partitions.push_back({{std::move(split.u), std::move(split.v)}, mean});
    return partitions;
}

HarmonicPartition irreducible_representation(const std::vector<Rational>& times,
                                             std::size_t max_elements) {
    HarmonicPartition result;
    result.mean = harmonic_mean(times);

    std::vector<std::vector<Rational>> pending{times};
    while (!pending.empty()) {
        std::vector<Rational> part = std::move(pending.front());
        pending.erase(pending.begin());
        auto splits = split_search(part, max_elements);
        if (splits.empty()) {
            result.parts.push_back(std::move(part));
            continue;
        }
        // split_search orders by the first part's sorted contents, so the
        // lexicographically least split comes first.
        pending.insert(pending.begin(), splits.front().parts[1]);
        pending.insert(pending.begin(), splits.front().parts[0]);
    }
    return result;
}

} // namespace prodsched
