#include <doctest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "prodsched/euclid.hpp"
#include "prodsched/harmonic.hpp"
#include "prodsched/verifier.hpp"

using namespace prodsched;
using testutil::change_instants;
using testutil::record_prefix;

namespace {

std::vector<long long> a_sequence(const EuclidTrace& trace) {
    std::vector<long long> a;
    for (std::size_t i = 1; i <= trace.stage_count(); ++i) a.push_back(trace.a(i));
    return a;
}

} // namespace

TEST_CASE("[euclid] trace of the worked examples") {
    CHECK(a_sequence(euclid_trace(180, 53)) == std::vector<long long>{3, 2, 1, 1, 10});
    CHECK(a_sequence(euclid_trace(8, 5)) == std::vector<long long>{1, 1, 1, 2});
    CHECK(a_sequence(euclid_trace(2, 1)) == std::vector<long long>{2});

    EuclidTrace t = euclid_trace(180, 53);
    CHECK(t.r(1) == 180);
    CHECK(t.r(2) == 53);
    CHECK(t.r(3) == 21);
    CHECK(t.r(4) == 11);
    CHECK(t.r(5) == 10);
    CHECK(t.r(6) == 1);
    CHECK(t.r(7) == 0);
}

TEST_CASE("[euclid] trace preconditions") {
    CHECK_THROWS_AS(euclid_trace(6, 4), NotCoprimeError);
    CHECK_THROWS_AS(euclid_trace(5, 5), ValidationError);
    CHECK_THROWS_AS(euclid_trace(3, 7), ValidationError);
    CHECK_THROWS_AS(euclid_trace(3, 0), ValidationError);
    CHECK_THROWS_MESSAGE(euclid_trace(6, 4), doctest::Contains("reduce first"));
}

TEST_CASE("[euclid] halt_number") {
    CHECK(halt_number(euclid_trace(180, 53)) == 17);
    CHECK(halt_number(euclid_trace(8, 5)) == 5);
    for (long long n : {5LL, 9LL, 14LL})
        CHECK(halt_number(euclid_trace(n - 1, 1)) == n - 1);
}

TEST_CASE("[euclid] stage_lengths") {
    auto lengths = stage_lengths(euclid_trace(180, 53));
    CHECK(lengths == std::vector<long long>{159, 42, 11, 10, 11});
    CHECK(std::accumulate(lengths.begin(), lengths.end(), 0LL) == 233);

    CHECK(stage_lengths(euclid_trace(8, 5)) == std::vector<long long>{5, 3, 2, 3});
    CHECK(stage_lengths(euclid_trace(2, 1)) == std::vector<long long>{3});
}

TEST_CASE("[euclid] stage_records reproduce the worked 180/53 chain") {
    auto records = stage_records(euclid_trace(180, 53));
    REQUIRE(records.size() == 5);
    CHECK(records[0].passive == RecordPair{106, 53});
    CHECK(records[0].active == RecordPair{159, 0});
    CHECK(records[1].passive == RecordPair{180, 21});
    CHECK(records[1].active == RecordPair{159, 42});
    CHECK(records[2].passive == RecordPair{159, 53});
    CHECK(records[2].active == RecordPair{170, 42});
    CHECK(records[3].passive == RecordPair{180, 42});
    CHECK(records[3].active == RecordPair{170, 52});
    CHECK(records[4].passive == RecordPair{180, 53});
    CHECK(records[4].active == RecordPair{180, 53});
}

TEST_CASE("[euclid] the 13x13 grid matches the transcribed Fibonacci table") {
    auto built = build_euclidean(8, 5, AgentOrder::Type2First);
    CHECK(built.matrix.rows() == testutil::fibonacci5_grid());
    CHECK(built.matrix.halt_instants_au() == std::vector<long long>{5, 8, 10, 11, 12});
    CHECK(halt_instants(built.trace) == std::vector<long long>{5, 8, 10, 11, 12});
}

TEST_CASE("[euclid] type1-first is the mirrored labelling") {
    auto t1 = build_euclidean(8, 5, AgentOrder::Type1First);
    auto t2 = build_euclidean(8, 5, AgentOrder::Type2First);
    const long long n = 13;
    for (long long i = 1; i <= n; ++i)
        for (long long j = 1; j <= n; ++j)
            CHECK(t1.matrix.at(i, j) == n + 1 - t2.matrix.at(n + 1 - i, j));
    // Same halt structure either way.
    CHECK(t1.matrix.halt_instants_au() == t2.matrix.halt_instants_au());
    // Object i starts on agent i under both labellings.
    for (long long i = 1; i <= n; ++i) CHECK(t1.matrix.at(i, 1) == i);
}

TEST_CASE("[euclid] golden 180/53 build") {
    auto built = build_euclidean(180, 53);
    CHECK(built.matrix.size() == 233);
    CHECK(built.matrix.halt_count() == 17);
    CHECK(halt_number(built.trace) == 17);
    REQUIRE(built.stages.size() == 5);
    CHECK(built.stages[0].length_au == 159);
    CHECK(built.stages[0].halts_at == std::vector<long long>{53, 106, 159});
    CHECK(built.stages[4].halts_at.size() == 10);
    CHECK(built.stages[4].halts_at.back() == 232);
}

TEST_CASE("[euclid] degenerate pair (2,1)") {
    auto built = build_euclidean(2, 1);
    CHECK(built.matrix.size() == 3);
    CHECK(built.matrix.halt_count() == 2);
    CHECK(validate(built.spec, matrix_to_scheme(built.matrix)).optimal);
}

TEST_CASE("[euclid] stage records match the simulated matrix at stage boundaries") {
    for (auto [r1, r2] : testutil::coprime_pairs_up_to(40)) {
        auto built = build_euclidean(r1, r2);
        const auto& trace = built.trace;
        const auto records = stage_records(trace);
        const auto lengths = stage_lengths(trace);
        const long long n = r1 + r2;

        std::vector<long long> last_change(static_cast<std::size_t>(n) + 1, 0);
        for (long long o = 1; o <= n; ++o) {
            auto changes = change_instants(built.matrix, o);
            last_change[static_cast<std::size_t>(o)] = changes.empty() ? 0 : changes.back();
        }

        long long boundary = 0;
        for (std::size_t stage = 1; stage <= trace.stage_count(); ++stage) {
            const long long start = boundary;
            boundary += lengths[stage - 1];
            auto recs = record_prefix(built.matrix, built.spec, boundary);
            long long newly_passive = 0, active = 0;
            for (long long o = 1; o <= n; ++o) {
                auto [w1, w2] = recs[static_cast<std::size_t>(o - 1)];
                if (last_change[static_cast<std::size_t>(o)] > boundary) {
                    ++active;
                    CHECK(w1 == records[stage - 1].active.type1);
                    CHECK(w2 == records[stage - 1].active.type2);
                } else if (last_change[static_cast<std::size_t>(o)] > start) {
                    ++newly_passive;
                    if (stage < trace.stage_count()) {
                        CHECK(w1 == records[stage - 1].passive.type1);
                        CHECK(w2 == records[stage - 1].passive.type2);
                    } else {
                        CHECK(w1 == r1);
                        CHECK(w2 == r2);
                    }
                }
            }
            if (stage < trace.stage_count()) {
                CHECK(newly_passive == trace.a(stage) * trace.r(stage + 1));
                // Active objects, active agents and remaining a.u. all agree.
                CHECK(active == trace.r(stage + 1) + trace.r(stage + 2));
                CHECK(active == n - boundary);
            }
        }
    }
}

TEST_CASE("[euclid] per-stage exchange counts follow the block structure") {
    for (auto [r1, r2] : testutil::coprime_pairs_up_to(40)) {
        auto built = build_euclidean(r1, r2);
        const auto& trace = built.trace;
        const auto lengths = stage_lengths(trace);
        const long long n = r1 + r2;

        std::vector<std::vector<long long>> changes(static_cast<std::size_t>(n) + 1);
        for (long long o = 1; o <= n; ++o) changes[static_cast<std::size_t>(o)] =
            change_instants(built.matrix, o);

        long long start = 0;
        for (std::size_t stage = 1; stage <= trace.stage_count(); ++stage) {
            const long long end = start + lengths[stage - 1];
            std::map<long long, long long> histogram;  // changes-in-stage -> objects
            for (long long o = 1; o <= n; ++o) {
                long long count = 0;
                for (long long tau : changes[static_cast<std::size_t>(o)])
                    if (tau > start && tau <= end) ++count;
                ++histogram[count];
            }
            const long long step = trace.r(stage + 1);
            const long long once = 2 * step;
            const long long twice = (trace.a(stage) - 1) * step;
            CHECK(histogram[1] == once);
            CHECK(histogram[2] == twice);
            CHECK(histogram[0] == n - once - twice);
            start = end;
        }
    }
}

TEST_CASE("[euclid] sweep: uniformity, halt counts and verifier optimality") {
    // Integer-level checks over every coprime pair up to n = 200; the full
    // rational verifier runs on the n <= 60 slice.
    for (auto [r1, r2] : testutil::coprime_pairs_up_to(200)) {
        auto built = build_euclidean(r1, r2);
        const long long n = r1 + r2;
        for (long long o = 1; o <= n; ++o) {
            auto rec = record_prefix(built.matrix, built.spec, n)[static_cast<std::size_t>(o - 1)];
            REQUIRE(rec.first == r1);
            REQUIRE(rec.second == r2);
        }
        REQUIRE(built.matrix.halt_count() == halt_number(built.trace));
        REQUIRE(built.matrix.halt_instants_au() == halt_instants(built.trace));

        if (n <= 60) {
            Scheme scheme = matrix_to_scheme(built.matrix);
            ValidationReport report = validate(built.spec, scheme);
            REQUIRE(report.optimal);
            REQUIRE(report.uniform);
            REQUIRE(type_matrix(built.spec, built.matrix).k_uniform);
        }
    }
}

TEST_CASE("[euclid] fibonacci_analysis") {
    SUBCASE("p = 5 is the worked example") {
        FibonacciReport report = fibonacci_analysis(5);
        CHECK(report.r1 == 8);
        CHECK(report.r2 == 5);
        CHECK(report.n == 13);
        CHECK(report.h == 5);
        CHECK(report.halts == std::vector<long long>{5, 8, 10, 11, 12});
        CHECK(report.bound_ok);
    }
    SUBCASE("p = 2 is the smallest admissible case") {
        FibonacciReport report = fibonacci_analysis(2);
        CHECK(report.r1 == 2);
        CHECK(report.r2 == 1);
        CHECK(report.n == 3);
        CHECK(report.h == 2);
    }
    SUBCASE("p = 10") {
        FibonacciReport report = fibonacci_analysis(10);
        CHECK(report.n == 144);
        CHECK(report.h == 10);
    }
    SUBCASE("h = p throughout the small range") {
        for (long long p = 2; p <= 25; ++p) {
            FibonacciReport report = fibonacci_analysis(p);
            CHECK(report.h == p);
            CHECK(report.bound_ok);
        }
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(fibonacci_analysis(1), ValidationError);
        CHECK_THROWS_AS(fibonacci_analysis(90), CapacityError);
    }
}

TEST_CASE("[euclid] halt_statistics") {
    SUBCASE("n = 13") {
        HaltStatistics stats = halt_statistics(13);
        std::vector<std::tuple<long long, long long, long long>> expected{
            {12, 1, 12}, {11, 2, 7}, {10, 3, 6}, {9, 4, 6}, {8, 5, 5}, {7, 6, 7}};
        CHECK(stats.per_pair == expected);
        CHECK(stats.mean == Rational{43, 6});
    }
    SUBCASE("n = 3") {
        HaltStatistics stats = halt_statistics(3);
        REQUIRE(stats.per_pair.size() == 1);
        CHECK(std::get<2>(stats.per_pair[0]) == 2);
        CHECK(stats.mean == Rational(2));
    }
    SUBCASE("n = 5") {
        HaltStatistics stats = halt_statistics(5);
        REQUIRE(stats.per_pair.size() == 2);
        CHECK(stats.mean == Rational{7, 2});
    }
    SUBCASE("precondition") {
        CHECK_THROWS_AS(halt_statistics(2), ValidationError);
    }
}
