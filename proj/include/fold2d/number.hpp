#ifndef FOLD2D_NUMBER_HPP
#define FOLD2D_NUMBER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace fold2d {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A numeric literal: an exact rational or an IEEE double. Arithmetic stays
// exact as long as both operands are rational and degrades to double as soon
// as either side is a double. Exactness is what lets the simplifier cancel
// like terms instead of leaving 1e-17 residues behind.
class Number {
  public:
    Number() : v_(Rational(0)) {}
    Number(Rational r) : v_(std::move(r)) {}
    Number(double d) : v_(d) {}
    static Number integer(long long n) { return Number(Rational(n)); }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_double() const { return !is_rational(); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    double to_double() const;

    bool is_zero() const;
    bool is_one() const;
    bool is_negative() const;
    // The value as a machine integer, when it is an exact rational with
    // denominator 1 that fits. Doubles never qualify.
    std::optional<long long> as_integer() const;

    Number operator-() const;
    friend Number operator+(const Number& a, const Number& b);
    friend Number operator-(const Number& a, const Number& b);
    friend Number operator*(const Number& a, const Number& b);
    friend Number operator/(const Number& a, const Number& b); // caller guarantees b != 0
    Number pow_integer(long long k) const;                     // caller guarantees base != 0 when k < 0

    // Exact equality; a rational never equals a double even when the values
    // coincide, so structural expression equality stays well defined.
    friend bool operator==(const Number& a, const Number& b);
    friend bool operator!=(const Number& a, const Number& b) { return !(a == b); }
    // Total order used for canonical sorting: rationals before doubles,
    // then by value.
    static int compare(const Number& a, const Number& b);

    // Re-parseable text. Rationals with a 2^a*5^b denominator print as exact
    // decimals, other rationals as "p/q"; doubles print in shortest
    // round-trip form.
    std::string str() const;

  private:
    std::variant<Rational, double> v_;
};

} // namespace fold2d

#endif
