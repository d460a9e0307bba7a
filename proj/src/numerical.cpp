#include "geomfactor/numerical.hpp"

#include <algorithm>

#include "geomfactor/errors.hpp"

namespace geomfactor {

namespace {

std::size_t to_index(const cpp_int& v, const char* what) {
    if (v < 0 || v > 100000000)
        throw usage_error(std::string(what) + " out of supported range: " + v.str());
    return static_cast<std::size_t>(v);
}

} // namespace

NumericalMonoid::NumericalMonoid(std::vector<cpp_int> generators)
    : generators_(std::move(generators)) {
    if (generators_.empty())
        throw usage_error("a numerical monoid needs at least one generator");
    for (const auto& g : generators_)
        if (g < 1)
            throw usage_error("generators must be positive integers");
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()),
                      generators_.end());
    cpp_int g = 0;
    for (const auto& v : generators_)
        g = gcd(g, v);
    if (g != 1)
        throw usage_error("generators must be coprime as a set");

    if (generators_.size() == 1) {
        params_ = ArithmeticParams{generators_[0], 1, 0}; // necessarily <1> = N_0
        return;
    }
    cpp_int d = generators_[1] - generators_[0];
    bool arithmetic = d > 0;
    for (std::size_t i = 1; arithmetic && i < generators_.size(); ++i)
        arithmetic = generators_[i] - generators_[i - 1] == d;
    cpp_int n = generators_.front();
    cpp_int k = cpp_int(generators_.size()) - 1;
    if (arithmetic && k <= n - 1)
        params_ = ArithmeticParams{n, d, k};
}

NumericalMonoid NumericalMonoid::arithmetic(const cpp_int& n, const cpp_int& d,
                                            const cpp_int& k) {
    if (n < 1 || d < 1 || k < 0)
        throw usage_error("arithmetic parameters must satisfy n, d >= 1 and k >= 0");
    if (k > n - 1)
        throw usage_error("arithmetic parameters must satisfy k <= n - 1");
    std::vector<cpp_int> gens;
    for (cpp_int i = 0; i <= k; ++i)
        gens.push_back(n + i * d);
    return NumericalMonoid(std::move(gens));
}

bool NumericalMonoid::member(const cpp_int& x) const {
    if (x < 0)
        return false;
    std::size_t limit = to_index(x, "membership query");
    std::vector<char> reachable(limit + 1, 0);
    reachable[0] = 1;
    for (std::size_t v = 1; v <= limit; ++v) {
        for (const auto& g : generators_) {
            if (g > v)
                break;
            if (reachable[v - to_index(g, "generator")]) {
                reachable[v] = 1;
                break;
            }
        }
    }
    return reachable[limit] != 0;
}

cpp_int NumericalMonoid::frobenius() const {
    if (is_naturals())
        return -1;
    std::size_t min_gen = to_index(generators_.front(), "generator");
    std::size_t cap =
        to_index(generators_.front() * generators_.back() + generators_.back(), "sweep cap");
    std::vector<char> reachable(cap + 1, 0);
    reachable[0] = 1;
    std::size_t run = 1;
    cpp_int last_gap = -1;
    for (std::size_t v = 1; v <= cap; ++v) {
        for (const auto& g : generators_) {
            if (g > v)
                break;
            if (reachable[v - static_cast<std::size_t>(g)]) {
                reachable[v] = 1;
                break;
            }
        }
        if (reachable[v]) {
            if (++run == min_gen)
                return last_gap;
        } else {
            run = 0;
            last_gap = v;
        }
    }
    throw error("frobenius sweep exceeded its cap"); // unreachable for gcd-1 generators
}

std::set<cpp_int> NumericalMonoid::length_set(const cpp_int& x) const {
    if (!member(x))
        throw not_member(x.str() + " is not a member of the numerical monoid");
    OracleBudget budget;
    budget.max_length = x / generators_.front() + 1;
    auto lengths = oracle_length_set(atom_list(), Rational(x), budget);
    return lengths.lengths;
}

NumericalMonoid::ClosedForms NumericalMonoid::closed_forms() const {
    if (!params_)
        throw not_arithmetic("generators do not form an admissible arithmetic sequence");
    if (is_naturals())
        throw unsupported("closed forms apply to proper numerical monoids, not N_0");
    const auto& [n, d, k] = *params_;
    cpp_int catenary = (n + k - 1) / k + d;
    return ClosedForms{Rational(n + d * k, n), {d}, catenary};
}

std::vector<Rational> NumericalMonoid::atom_list() const {
    std::vector<Rational> atoms;
    atoms.reserve(generators_.size());
    for (const auto& g : generators_)
        atoms.emplace_back(g);
    return atoms;
}

} // namespace geomfactor
