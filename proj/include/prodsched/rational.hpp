#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <vector>

#include "prodsched/errors.hpp"

namespace prodsched {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always kept in lowest terms with a positive
// denominator. All model arithmetic goes through this type; no floating
// point ever enters scheme construction or verification.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt value) : num_(std::move(value)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);

    // Accepts "3", "-7", "num/den" and plain decimals such as "0.005".
    static Rational from_string(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational reciprocal() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    // "num" when integral, otherwise "num/den".
    std::string to_string() const;

    // Decimal rendering with the given number of significant figures,
    // rounding halves away from zero. Internal values stay exact.
    std::string to_decimal(unsigned significant_figures = 5) const;

    // Fixed-point rendering with exactly `decimals` digits after the point.
    std::string to_fixed(unsigned decimals) const;

    double to_double() const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

// Lexicographic comparison of rational sequences.
bool lexicographic_less(const std::vector<Rational>& a, const std::vector<Rational>& b);

} // namespace prodsched
