#include "geomfactor/semiring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "geomfactor/errors.hpp"

namespace geomfactor {

using boost::multiprecision::powm;

CyclicSemiring::CyclicSemiring(Rational r) : r_(std::move(r)) {
    if (!r_.is_positive())
        throw negative_value("semiring parameter must be positive");
    a_ = r_.num();
    b_ = r_.den();
    if (b_ == 1)
        cls_ = SemiringClass::FactorialInteger;
    else if (a_ == 1)
        cls_ = SemiringClass::Antimatter;
    else
        cls_ = SemiringClass::AtomicNonInteger;
}

CyclicSemiring classify(const Rational& r) {
    return CyclicSemiring(r);
}

Rational evaluate(const CyclicSemiring& S, const Factorization& z) {
    if (!S.atomic())
        throw not_atomic("S_" + S.r().str() + " is antimatter");
    Rational total(0);
    for (const auto& [exp, coeff] : z.terms())
        total += Rational(coeff) * S.atom(exp);
    return total;
}

namespace detail {

std::optional<unsigned> denominator_depth(const cpp_int& den, const cpp_int& b) {
    cpp_int q = den;
    unsigned m = 0;
    while (q > 1) {
        cpp_int g = gcd(q, b);
        if (g == 1)
            return std::nullopt;
        q /= g;
        ++m;
    }
    return m;
}

cpp_int mod_inverse(const cpp_int& x, const cpp_int& m) {
    cpp_int old_r = x % m, r = m;
    cpp_int old_s = 1, s = 0;
    while (r != 0) {
        cpp_int q = old_r / r;
        cpp_int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    cpp_int inv = old_s % m;
    if (inv < 0)
        inv += m;
    return inv;
}

namespace {

// r > 1: digits come out bottom-up. At each step the constant coefficient of
// the remainder v is forced modulo a via v*b^m = alpha_0*b^m (mod a); the
// remainder then shrinks by a factor r, and any nonzero remainder below 1
// rejects because the smallest atom is 1.
std::optional<Factorization> extract_min_form_gt1(const CyclicSemiring& S, const Rational& x) {
    const cpp_int& a = S.a();
    const cpp_int& b = S.b();
    const cpp_int inv_b = mod_inverse(b, a);
    const Rational one(1);

    Factorization out;
    Rational v = x;
    Factorization::exponent_type i = 0;
    while (!v.is_zero()) {
        if (v < one)
            return std::nullopt;
        auto m = denominator_depth(v.den(), b);
        if (!m)
            return std::nullopt;
        cpp_int scaled = v.num() * (boost::multiprecision::pow(b, *m) / v.den());
        cpp_int alpha = scaled % a;
        if (*m > 0) {
            cpp_int shift = powm(inv_b, cpp_int(*m), a);
            alpha = alpha * shift % a;
        }
        auto rest = try_sub(v, Rational(alpha));
        if (!rest)
            return std::nullopt;
        out.add(i, alpha);
        v = *rest * Rational(b, a);
        ++i;
    }
    return out;
}

// r < 1: digits come out top-down. The top exponent of the minimum-length
// factorization is exactly the minimal m with x*b^m integral, and the digit
// there is forced modulo b; subtracting it strictly lowers the depth.
std::optional<Factorization> extract_min_form_lt1(const CyclicSemiring& S, const Rational& x) {
    const cpp_int& a = S.a();
    const cpp_int& b = S.b();
    const cpp_int inv_a = mod_inverse(a % b, b);

    Factorization out;
    Rational v = x;
    while (!v.is_zero()) {
        if (v.is_integer()) {
            out.add(0, v.num());
            break;
        }
        auto m = denominator_depth(v.den(), b);
        if (!m)
            return std::nullopt;
        cpp_int scaled = v.num() * (boost::multiprecision::pow(b, *m) / v.den());
        cpp_int shift = powm(inv_a, cpp_int(*m), b);
        cpp_int alpha = scaled % b * shift % b;
        if (alpha == 0)
            return std::nullopt; // forced digit at the top exponent vanished
        auto rest = try_sub(v, Rational(alpha) * S.atom(*m));
        if (!rest)
            return std::nullopt;
        out.add(*m, alpha);
        v = *rest;
    }
    return out;
}

} // namespace

std::optional<Factorization> extract_min_form(const CyclicSemiring& S, const Rational& x) {
    if (x.is_zero())
        return Factorization{};
    if (S.integer()) {
        if (!x.is_integer())
            return std::nullopt;
        Factorization out;
        out.add(0, x.num());
        return out;
    }
    return S.greater_than_one() ? extract_min_form_gt1(S, x) : extract_min_form_lt1(S, x);
}

} // namespace detail

bool member(const CyclicSemiring& S, const Rational& x) {
    if (!S.atomic())
        throw not_atomic("S_" + S.r().str() + " is antimatter");
    return detail::extract_min_form(S, x).has_value();
}

Factorization min_length_factorization(const CyclicSemiring& S, const Rational& x) {
    if (!S.atomic())
        throw not_atomic("S_" + S.r().str() + " is antimatter");
    auto z = detail::extract_min_form(S, x);
    if (!z)
        throw not_member(x.str() + " is not a member of S_" + S.r().str());
    return *z;
}

std::optional<Factorization> max_length_factorization(const CyclicSemiring& S,
                                                      const Rational& x) {
    Factorization z = min_length_factorization(S, x);
    if (S.integer())
        return z;
    if (S.greater_than_one()) {
        // Trade b copies of r^i for a copies of r^(i-1), top down, until every
        // coefficient above the constant one is below b. Each trade raises the
        // length, and the result is the unique maximum-length form.
        Factorization out = z;
        if (out.empty())
            return out;
        for (auto i = out.top_exponent(); i >= 1; --i) {
            const cpp_int& c = out.coefficient(i);
            cpp_int t = c / S.b();
            if (t > 0) {
                out.add(i, -(t * S.b()));
                out.add(i - 1, t * S.a());
            }
        }
        return out;
    }
    // r < 1: sup L(x) is infinite exactly when some digit reaches a.
    for (const auto& [e, c] : z.terms())
        if (c >= S.a())
            return std::nullopt;
    return z;
}

bool divides(const CyclicSemiring& S, const Rational& x, const Rational& y) {
    auto rest = try_sub(y, x);
    if (!rest)
        return false;
    return member(S, *rest);
}

} // namespace geomfactor
