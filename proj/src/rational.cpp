#include "geomfactor/rational.hpp"

#include <ostream>

namespace geomfactor {

Rational::Rational(cpp_int num, cpp_int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0)
        throw zero_denominator();
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ < 0)
        throw negative_value("negative rational " + num_.str() + "/" + den_.str());
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    cpp_int g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> cpp_int {
        if (s.empty())
            throw parse_error("empty integer literal");
        std::size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size())
            throw parse_error("bad integer literal '" + std::string(s) + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw parse_error("bad integer literal '" + std::string(s) + "'");
        return cpp_int(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text), 1);
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    cpp_int n = num_ * o.den_ - o.num_ * den_;
    if (n < 0)
        throw negative_value("subtraction would be negative");
    return Rational(std::move(n), den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0)
        throw zero_denominator();
    return Rational(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    cpp_int lhs = num_ * o.den_;
    cpp_int rhs = o.num_ * den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

std::optional<Rational> try_sub(const Rational& a, const Rational& b) {
    if (a < b)
        return std::nullopt;
    return a - b;
}

Rational pow(const Rational& base, unsigned exp) {
    using boost::multiprecision::pow;
    if (exp == 0)
        return Rational(1);
    return Rational(pow(base.num(), exp), pow(base.den(), exp));
}

Rational make_rational(const cpp_int& p, const cpp_int& q) {
    return Rational(p, q);
}

} // namespace geomfactor
