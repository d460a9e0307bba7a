/**
 * @file semiring.hpp
 * @brief The cyclic rational semiring S_r and its canonical factorizations.
 *
 * S_r is the additive monoid generated by the powers r^n of a positive
 * rational r. Writing r = a/b in lowest terms, the three regimes are:
 *
 *   b == 1          S_r = N_0, atoms {1}, every element factors uniquely
 *   b > 1, a == 1   no atoms at all; factorization operations refuse
 *   b > 1, a > 1    atomic with atom set {r^n | n >= 0}
 *
 * In the atomic non-integer regime every element has a unique factorization
 * of minimum length and, for r > 1, a unique one of maximum length. Both are
 * computed by modular digit extraction: the coefficient at each exponent is
 * forced modulo a (respectively b) because gcd(a, b) = 1, so membership and
 * both normal forms come out of a single linear pass with no search.
 */
#ifndef GEOMFACTOR_SEMIRING_HPP
#define GEOMFACTOR_SEMIRING_HPP

#include <optional>

#include "geomfactor/factorization.hpp"
#include "geomfactor/rational.hpp"

namespace geomfactor {

enum class SemiringClass {
    FactorialInteger, // r integer (b == 1), including r = 1
    AtomicNonInteger, // b > 1 and a > 1
    Antimatter,       // b > 1 and a == 1
};

class CyclicSemiring {
public:
    explicit CyclicSemiring(Rational r);

    const Rational& r() const { return r_; }
    const cpp_int& a() const { return a_; } // n(r)
    const cpp_int& b() const { return b_; } // d(r)
    SemiringClass cls() const { return cls_; }

    bool atomic() const { return cls_ != SemiringClass::Antimatter; }
    bool integer() const { return cls_ == SemiringClass::FactorialInteger; }
    bool greater_than_one() const { return a_ > b_; }

    // |a - b|: the common difference of every non-singleton length set.
    cpp_int length_difference() const { return a_ > b_ ? a_ - b_ : b_ - a_; }

    Rational atom(Factorization::exponent_type exp) const { return pow(r_, exp); }

private:
    Rational r_;
    cpp_int a_;
    cpp_int b_;
    SemiringClass cls_;
};

CyclicSemiring classify(const Rational& r);

// phi(z) = sum of coefficient * r^exponent, exactly.
Rational evaluate(const CyclicSemiring& S, const Factorization& z);

bool member(const CyclicSemiring& S, const Rational& x);

// The unique minimum-length factorization of x. Throws not_member.
Factorization min_length_factorization(const CyclicSemiring& S, const Rational& x);

// The unique maximum-length factorization, or nullopt when sup L(x) is
// infinite (possible only for r < 1).
std::optional<Factorization> max_length_factorization(const CyclicSemiring& S,
                                                      const Rational& x);

// x |_{S_r} y, i.e. y - x is again a member. False when y < x.
bool divides(const CyclicSemiring& S, const Rational& x, const Rational& y);

namespace detail {

// Minimal m with den | b^m, or nullopt if den has a prime factor outside b.
std::optional<unsigned> denominator_depth(const cpp_int& den, const cpp_int& b);

// Inverse of x modulo m (gcd(x, m) = 1 expected).
cpp_int mod_inverse(const cpp_int& x, const cpp_int& m);

// Digit extraction cores; nullopt means x is not a member.
std::optional<Factorization> extract_min_form(const CyclicSemiring& S, const Rational& x);

} // namespace detail

} // namespace geomfactor

#endif // GEOMFACTOR_SEMIRING_HPP
