#include "geomfactor/factorization.hpp"

#include <vector>

#include "geomfactor/errors.hpp"

namespace geomfactor {

void Factorization::add(exponent_type exp, const cpp_int& count) {
    if (count == 0)
        return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (count < 0)
            throw negative_value("negative coefficient");
        terms_.emplace(exp, count);
        return;
    }
    it->second += count;
    if (it->second == 0) {
        terms_.erase(it);
        return;
    }
    if (it->second < 0)
        throw negative_value("negative coefficient");
}

const cpp_int& Factorization::coefficient(exponent_type exp) const {
    static const cpp_int zero(0);
    auto it = terms_.find(exp);
    return it == terms_.end() ? zero : it->second;
}

Factorization::exponent_type Factorization::top_exponent() const {
    return terms_.rbegin()->first;
}

cpp_int Factorization::length() const {
    cpp_int total = 0;
    for (const auto& [e, c] : terms_)
        total += c;
    return total;
}

Factorization gcd(const Factorization& a, const Factorization& b) {
    Factorization out;
    for (const auto& [e, c] : a.terms()) {
        const cpp_int& other = b.coefficient(e);
        if (other != 0)
            out.add(e, c < other ? c : other);
    }
    return out;
}

cpp_int distance(const Factorization& a, const Factorization& b) {
    cpp_int shared = gcd(a, b).length();
    cpp_int da = a.length() - shared;
    cpp_int db = b.length() - shared;
    return da > db ? da : db;
}

bool canonical_less(const Factorization& a, const Factorization& b) {
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb)
            return true; // a has a term where b has run out: coefficient > 0 vs 0
        if (ia == ea)
            return false;
        if (ia->first != ib->first)
            return ia->first < ib->first; // lower exponent with nonzero coefficient wins
        if (ia->second != ib->second)
            return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

cpp_int LengthSet::max() const {
    if (!count)
        throw infinite_object("length set is infinite");
    return start + (*count - 1) * difference;
}

bool LengthSet::contains(const cpp_int& len) const {
    if (len < start)
        return false;
    if (difference == 0)
        return len == start;
    if ((len - start) % difference != 0)
        return false;
    if (!count)
        return true;
    return (len - start) / difference < *count;
}

std::vector<cpp_int> LengthSet::values_up_to(const cpp_int& limit) const {
    std::vector<cpp_int> out;
    if (difference == 0) {
        if (start <= limit)
            out.push_back(start);
        return out;
    }
    cpp_int v = start;
    cpp_int emitted = 0;
    while (v <= limit && (!count || emitted < *count)) {
        out.push_back(v);
        v += difference;
        ++emitted;
    }
    return out;
}

} // namespace geomfactor
