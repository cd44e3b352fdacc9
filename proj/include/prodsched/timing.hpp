#pragma once

#include "prodsched/rational.hpp"

namespace prodsched {

// Wall-clock production summary when each halt (plus the initial loading)
// costs epsilon hours: total = H + (halt_count + 1) * epsilon.
struct TimingReport {
    Rational H;
    long long halt_count = 0;
    Rational epsilon;
    Rational total;
    Rational excess_percent;  // 100 (total - H) / H
};

// Optimal time for r1 agents of unit speed and r2 agents of speed T:
// H = nT / (r1 T + r2) with n = r1 + r2. T = 1 is rejected; the two classes
// must differ.
Rational optimal_time_two_type(long long r1, long long r2, const Rational& T);

TimingReport total_time(const Rational& H, long long halts, const Rational& epsilon);

// Optimal journey time (r1 + r2 T) / n of the corresponding travel problem;
// strictly exceeds optimal_time_two_type for every T != 1.
Rational biker_hiker_time(long long r1, long long r2, const Rational& T);

} // namespace prodsched
