#include "fold2d/number.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace fold2d {

namespace {

std::string double_str(double d) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), d);
    return std::string(buf, res.ptr);
}

} // namespace

double Number::to_double() const {
    if (is_rational())
        return rational().convert_to<double>();
    return std::get<double>(v_);
}

bool Number::is_zero() const {
    return is_rational() ? rational() == 0 : std::get<double>(v_) == 0.0;
}

bool Number::is_one() const {
    return is_rational() ? rational() == 1 : std::get<double>(v_) == 1.0;
}

bool Number::is_negative() const {
    return is_rational() ? rational() < 0 : std::get<double>(v_) < 0.0;
}

std::optional<long long> Number::as_integer() const {
    if (!is_rational())
        return std::nullopt;
    const Rational& r = rational();
    if (denominator(r) != 1)
        return std::nullopt;
    const BigInt& num = numerator(r);
    if (num > std::numeric_limits<long long>::max() || num < std::numeric_limits<long long>::min())
        return std::nullopt;
    return num.convert_to<long long>();
}

Number Number::operator-() const {
    if (is_rational())
        return Number(Rational(-rational()));
    return Number(-std::get<double>(v_));
}

Number operator+(const Number& a, const Number& b) {
    if (a.is_rational() && b.is_rational())
        return Number(Rational(a.rational() + b.rational()));
    return Number(a.to_double() + b.to_double());
}

Number operator-(const Number& a, const Number& b) {
    if (a.is_rational() && b.is_rational())
        return Number(Rational(a.rational() - b.rational()));
    return Number(a.to_double() - b.to_double());
}

Number operator*(const Number& a, const Number& b) {
    if (a.is_rational() && b.is_rational())
        return Number(Rational(a.rational() * b.rational()));
    return Number(a.to_double() * b.to_double());
}

Number operator/(const Number& a, const Number& b) {
    if (a.is_rational() && b.is_rational())
        return Number(Rational(a.rational() / b.rational()));
    return Number(a.to_double() / b.to_double());
}

Number Number::pow_integer(long long k) const {
    if (k == 0)
        return Number::integer(1);
    if (is_rational()) {
        const unsigned n = static_cast<unsigned>(k < 0 ? -k : k);
        BigInt num = boost::multiprecision::pow(numerator(rational()), n);
        BigInt den = boost::multiprecision::pow(denominator(rational()), n);
        if (k < 0)
            std::swap(num, den);
        return Number(Rational(num, den));
    }
    return Number(std::pow(std::get<double>(v_), static_cast<double>(k)));
}

bool operator==(const Number& a, const Number& b) {
    if (a.is_rational() != b.is_rational())
        return false;
    if (a.is_rational())
        return a.rational() == b.rational();
    return a.to_double() == b.to_double();
}

int Number::compare(const Number& a, const Number& b) {
    if (a.is_rational() != b.is_rational())
        return a.is_rational() ? -1 : 1;
    if (a.is_rational()) {
        if (a.rational() < b.rational()) return -1;
        if (b.rational() < a.rational()) return 1;
        return 0;
    }
    double x = a.to_double(), y = b.to_double();
    if (x < y) return -1;
    if (y < x) return 1;
    return 0;
}

std::string Number::str() const {
    if (!is_rational())
        return double_str(to_double());
    const Rational& r = rational();
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    if (den == 1)
        return num.str();
    // Exact decimal expansion when den = 2^a * 5^b.
    BigInt d = den;
    unsigned twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1)
        return num.str() + "/" + den.str();
    const unsigned k = std::max(twos, fives);
    BigInt scaled = boost::multiprecision::abs(num) *
                    boost::multiprecision::pow(BigInt(2), k - twos) *
                    boost::multiprecision::pow(BigInt(5), k - fives);
    std::string digits = scaled.str();
    if (digits.size() <= k)
        digits.insert(0, k + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
    while (out.back() == '0')
        out.pop_back();
    if (out.back() == '.')
        out.pop_back();
    return (num < 0 ? "-" : "") + out;
}

} // namespace fold2d
