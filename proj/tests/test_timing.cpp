#include <doctest.h>

#include <random>

#include "prodsched/euclid.hpp"
#include "prodsched/harmonic.hpp"
#include "prodsched/timing.hpp"

using namespace prodsched;

TEST_CASE("[timing] optimal_time_two_type") {
    CHECK(optimal_time_two_type(8, 5, Rational(2)) == Rational{26, 21});
    CHECK(optimal_time_two_type(180, 53, Rational(2)) == Rational{466, 413});
    CHECK(optimal_time_two_type(1, 1, Rational(2)) == Rational{4, 3});
    // Consistency with the general optimum formula.
    ProblemSpec spec({{Rational(1), 8}, {Rational(2), 5}});
    CHECK(optimal_time_two_type(8, 5, Rational(2)) == optimum_time(spec));

    CHECK_THROWS_AS(optimal_time_two_type(8, 5, Rational(1)), ValidationError);
    CHECK_THROWS_AS(optimal_time_two_type(0, 5, Rational(2)), ValidationError);
    CHECK_THROWS_AS(optimal_time_two_type(8, 5, Rational(-2)), ValidationError);
}

TEST_CASE("[timing] total_time") {
    const Rational eps{1, 200};

    TimingReport cyclic = total_time(Rational{26, 21}, 12, eps);
    CHECK(cyclic.total == Rational{26, 21} + Rational(13) * eps);
    CHECK(cyclic.total.to_decimal(5) == "1.3031");
    CHECK(cyclic.excess_percent == Rational{21, 4});
    CHECK(cyclic.excess_percent.to_fixed(1) == "5.3");

    TimingReport euclid = total_time(Rational{26, 21}, 5, eps);
    CHECK(euclid.total.to_decimal(5) == "1.2681");
    CHECK(euclid.excess_percent == Rational{63, 26});
    CHECK(euclid.excess_percent.to_fixed(1) == "2.4");

    TimingReport free_handover = total_time(Rational{26, 21}, 12, Rational(0));
    CHECK(free_handover.total == Rational{26, 21});
    CHECK(free_handover.excess_percent == Rational(0));

    CHECK_THROWS_AS(total_time(Rational{26, 21}, 12, Rational(-1)), ValidationError);
}

TEST_CASE("[timing] the 233-agent scenario") {
    const Rational eps{1, 200};
    Rational H = optimal_time_two_type(180, 53, Rational(2));
    CHECK(H.to_decimal(5) == "1.1283");

    TimingReport cyclic = total_time(H, 232, eps);
    CHECK(cyclic.total.to_decimal(5) == "2.2933");
    CHECK(cyclic.excess_percent == Rational{413, 4});  // exactly 103.25 %
    CHECK(cyclic.excess_percent.to_fixed(1) == "103.3");

    TimingReport euclid = total_time(H, halt_number(euclid_trace(180, 53)), eps);
    CHECK(euclid.total.to_decimal(5) == "1.2183");
    CHECK(euclid.excess_percent == Rational{3717, 466});
    CHECK(euclid.excess_percent.to_fixed(1) == "8.0");
}

TEST_CASE("[timing] cyclic halt accounting: total = H + n * epsilon") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long long> count(1, 50);
    std::uniform_int_distribution<long long> part(1, 9);
    for (int iter = 0; iter < 100; ++iter) {
        long long n = count(rng) + 1;
        Rational H{part(rng), part(rng)};
        Rational eps{part(rng), part(rng) * 100};
        TimingReport report = total_time(H, n - 1, eps);
        CHECK(report.total == H + Rational(n) * eps);
    }
}

TEST_CASE("[timing] biker_hiker_time") {
    CHECK(biker_hiker_time(8, 5, Rational(2)) == Rational{18, 13});
    CHECK(optimal_time_two_type(8, 5, Rational(2)) < biker_hiker_time(8, 5, Rational(2)));
    CHECK(biker_hiker_time(1, 1, Rational(2)) == Rational{3, 2});
    CHECK(optimal_time_two_type(1, 1, Rational(2)) == Rational{4, 3});
    CHECK_THROWS_AS(biker_hiker_time(8, 5, Rational(1)), ValidationError);
}

TEST_CASE("[timing] the production scheme always beats the journey time") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> count(1, 100);
    std::uniform_int_distribution<long long> part(1, 40);
    for (int iter = 0; iter < 500; ++iter) {
        long long r1 = count(rng), r2 = count(rng);
        Rational T{part(rng), part(rng)};
        if (T == Rational(1)) continue;
        CHECK(optimal_time_two_type(r1, r2, T) < biker_hiker_time(r1, r2, T));
    }
}
