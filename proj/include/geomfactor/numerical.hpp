/**
 * @file numerical.hpp
 * @brief Numerical monoids, with closed forms for arithmetic-sequence
 *        generators <n, n+d, ..., n+kd> (k <= n-1).
 */
#ifndef GEOMFACTOR_NUMERICAL_HPP
#define GEOMFACTOR_NUMERICAL_HPP

#include <optional>
#include <set>
#include <vector>

#include "geomfactor/oracle.hpp"
#include "geomfactor/rational.hpp"

namespace geomfactor {

struct ArithmeticParams {
    cpp_int n;
    cpp_int d;
    cpp_int k;
};

class NumericalMonoid {
public:
    // Generators are sorted, deduplicated, and must have gcd 1 (so the
    // complement in N_0 is finite). Arithmetic parameters are detected.
    explicit NumericalMonoid(std::vector<cpp_int> generators);
    static NumericalMonoid arithmetic(const cpp_int& n, const cpp_int& d, const cpp_int& k);

    const std::vector<cpp_int>& generators() const { return generators_; }
    const std::optional<ArithmeticParams>& params() const { return params_; }
    bool is_naturals() const { return generators_.size() == 1; } // gcd 1 forces {1}

    bool member(const cpp_int& x) const;

    // Largest gap, or -1 for N_0. Membership sweep: stop once min(generators)
    // consecutive members appear.
    cpp_int frobenius() const;

    // Exhaustive factorization lengths of x over the generators.
    std::set<cpp_int> length_set(const cpp_int& x) const;

    struct ClosedForms {
        Rational rho;            // (n + dk)/n, accepted
        std::set<cpp_int> delta; // {d}
        cpp_int catenary;        // ceil(n/k) + d
    };
    // Table-style closed forms; require arithmetic parameters and N != N_0.
    ClosedForms closed_forms() const;

    std::vector<Rational> atom_list() const;

private:
    std::vector<cpp_int> generators_;
    std::optional<ArithmeticParams> params_;
};

} // namespace geomfactor

#endif // GEOMFACTOR_NUMERICAL_HPP
