#include "prodsched/rational.hpp"

#include <algorithm>
#include <cctype>

namespace prodsched {

namespace {

BigInt pow10(long exponent) {
    BigInt result = 1;
    for (long i = 0; i < exponent; ++i) result *= 10;
    return result;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

} // namespace

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw DivisionByZeroError();
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_string(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c) != 0; }),
            s.end());
    if (s.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        s.erase(s.begin());
    }
    if (s.empty()) throw ParseError("sign without digits in '" + text + "'");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("bad fraction '" + text + "'");
        Rational r{BigInt(num), BigInt(den)};
        return negative ? -r : r;
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || !all_digits(frac))
            throw ParseError("bad decimal '" + text + "'");
        Rational r(BigInt(whole + frac), pow10(static_cast<long>(frac.size())));
        return negative ? -r : r;
    }

    if (!all_digits(s)) throw ParseError("bad integer '" + text + "'");
    Rational r{BigInt(s)};
    return negative ? -r : r;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw DivisionByZeroError();
    return Rational(den_, num_);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw DivisionByZeroError();
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    BigInt l = lhs.num_ * rhs.den_, r = rhs.num_ * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::string Rational::to_decimal(unsigned significant_figures) const {
    if (significant_figures == 0) significant_figures = 1;
    if (num_ == 0) return "0";
    BigInt a = num_ < 0 ? BigInt(-num_) : num_;
    const BigInt& b = den_;

    // Exponent e such that 10^e <= a/b < 10^(e+1).
    long e = 0;
    if (a >= b) {
        BigInt quotient = a / b;
        e = static_cast<long>(quotient.str().size()) - 1;
    } else {
        BigInt scaled = a * 10;
        e = -1;
        while (scaled < b) {
            scaled *= 10;
            --e;
        }
    }

    long shift = static_cast<long>(significant_figures) - 1 - e;
    BigInt scaled_num = a, scaled_den = b;
    if (shift >= 0)
        scaled_num *= pow10(shift);
    else
        scaled_den *= pow10(-shift);
    BigInt digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);
    std::string ds = digits.str();
    if (ds.size() > significant_figures) {
        // Rounding carried into a new leading digit (e.g. 9.9996 -> 10.000).
        ds.pop_back();
        ++e;
    }

    std::string out;
    if (e >= 0) {
        auto int_digits = static_cast<unsigned long>(e) + 1;
        if (int_digits >= ds.size()) {
            out = ds + std::string(int_digits - ds.size(), '0');
        } else {
            out = ds.substr(0, int_digits) + "." + ds.substr(int_digits);
        }
    } else {
        out = "0." + std::string(static_cast<unsigned long>(-e) - 1, '0') + ds;
    }
    return num_ < 0 ? "-" + out : out;
}

std::string Rational::to_fixed(unsigned decimals) const {
    BigInt a = num_ < 0 ? BigInt(-num_) : num_;
    BigInt scaled = (2 * a * pow10(static_cast<long>(decimals)) + den_) / (2 * den_);
    std::string ds = scaled.str();
    if (ds.size() <= decimals) ds.insert(0, decimals + 1 - ds.size(), '0');
    std::string out = decimals == 0 ? ds
                                    : ds.substr(0, ds.size() - decimals) + "." +
                                          ds.substr(ds.size() - decimals);
    return num_ < 0 && scaled != 0 ? "-" + out : out;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

bool lexicographic_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace prodsched
