/**
 * @file rational.hpp
 * @brief Exact nonnegative rationals on arbitrary-precision integers.
 *
 * Always reduced to lowest terms; zero is canonically 0/1. The numerator
 * and denominator of a positive value q are exactly the usual n(q), d(q).
 * Values are immutable after construction and safe to share across threads.
 */
#ifndef GEOMFACTOR_RATIONAL_HPP
#define GEOMFACTOR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "geomfactor/errors.hpp"

namespace geomfactor {

using boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : Rational(cpp_int(n), cpp_int(1)) {}
    Rational(const cpp_int& n) : Rational(n, cpp_int(1)) {}

    // Reduced nonnegative fraction. Throws zero_denominator / negative_value.
    Rational(cpp_int num, cpp_int den);

    // Accepts "p/q" or a bare integer "p".
    static Rational parse(std::string_view text);

    const cpp_int& num() const { return num_; }
    const cpp_int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }

    Rational operator+(const Rational& o) const;
    // Throws negative_value when the result would be negative; see try_sub.
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const Rational& o) const;

    // Always "p/q", including "3/1" and "0/1".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    cpp_int num_;
    cpp_int den_; // > 0
};

// a - b, or nullopt when a < b.
std::optional<Rational> try_sub(const Rational& a, const Rational& b);

Rational pow(const Rational& base, unsigned exp);

// Free-function constructor: reduced nonnegative fraction from two integers.
Rational make_rational(const cpp_int& p, const cpp_int& q);

} // namespace geomfactor

#endif // GEOMFACTOR_RATIONAL_HPP
