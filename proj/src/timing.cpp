#include "prodsched/timing.hpp"

namespace prodsched {

namespace {

void check_two_type_args(long long r1, long long r2, const Rational& T) {
    if (r1 < 1 || r2 < 1) throw ValidationError("agent counts must be positive");
    if (T.sign() <= 0) throw ValidationError("T must be positive");
    if (T == Rational(1))
        throw ValidationError("T = 1 makes the two classes identical");
}

} // namespace

Rational optimal_time_two_type(long long r1, long long r2, const Rational& T) {
    check_two_type_args(r1, r2, T);
    const Rational n(r1 + r2);
    return n * T / (Rational(r1) * T + Rational(r2));
}

TimingReport total_time(const Rational& H, long long halts, const Rational& epsilon) {
    if (epsilon.sign() < 0) throw ValidationError("epsilon must be non-negative");
    if (H.sign() <= 0) throw ValidationError("H must be positive");
    if (halts < 0) throw ValidationError("halt count must be non-negative");
    TimingReport report;
    report.H = H;
    report.halt_count = halts;
    report.epsilon = epsilon;
    report.total = H + Rational(halts + 1) * epsilon;
    report.excess_percent = Rational(100) * (report.total - H) / H;
    return report;
}

Rational biker_hiker_time(long long r1, long long r2, const Rational& T) {
    check_two_type_args(r1, r2, T);
    return (Rational(r1) + Rational(r2) * T) / Rational(r1 + r2);
}

} // namespace prodsched
