/**
 * @file invariants.hpp
 * @brief Closed-form factorization invariants of S_r and witness builders.
 *
 * Everything here is exact. Quantities that can be infinite are reported as
 * std::nullopt in an optional. The budgeted searches (unions of lengths,
 * bounded omega) are deterministic for a fixed budget and say explicitly
 * whether the budget proved minimality.
 */
#ifndef GEOMFACTOR_INVARIANTS_HPP
#define GEOMFACTOR_INVARIANTS_HPP

#include <optional>
#include <set>

#include "geomfactor/oracle.hpp"
#include "geomfactor/semiring.hpp"

namespace geomfactor {

// sup L(x) / inf L(x); nullopt = infinite. Finite values are always >= 1.
using ElasticityValue = std::optional<Rational>;

struct MonoidElasticity {
    ElasticityValue value;
    bool accepted; // attained by some element
};

struct UnionOfLengths {
    cpp_int k;
    LengthSet set;               // difference is 0 or |a - b|
    bool lower_bound_certified;  // true when min(set) was proved minimal
};

struct LocalElasticities {
    cpp_int lambda_k;
    std::optional<cpp_int> rho_k; // nullopt = infinite
};

struct TamenessReport {
    bool locally_tame;
    bool globally_tame;
    std::optional<cpp_int> omega_one; // nullopt = infinite
};

struct ElasticityWitness {
    Rational x;
    Factorization zmin;
    Factorization zmax;
    Rational rho; // equals the requested target exactly
};

struct DenseElasticitySample {
    Rational y;
    Rational rho;
    cpp_int padding; // K: number of fresh atoms appended above the support
};

struct TauWitness {
    Factorization bundle;          // d(r) copies of r^k
    Rational remainder;            // evaluate(bundle) - 1
    cpp_int remainder_min_length;  // k(a-b) + b - 1, verified by extraction
};

struct OmegaBound {
    cpp_int value;
    bool certified;
};

// L(x) as a symbolic progression: the difference is |a-b|, and the count
// is infinite exactly when r < 1 and x has several factorizations.
LengthSet length_set(const CyclicSemiring& S, const Rational& x);

// Empty for integer r, otherwise {|a - b|}.
std::set<cpp_int> delta_set(const CyclicSemiring& S);

// 0 for integer r, otherwise max{a, b}.
cpp_int catenary_degree(const CyclicSemiring& S);

Rational elasticity_of_zero(); // rho(0) = 1 by definition
ElasticityValue elasticity(const CyclicSemiring& S, const Rational& x);
MonoidElasticity monoid_elasticity(const CyclicSemiring& S);

// For r > 1 with a = b + 1: an element whose elasticity is exactly q > 1,
// together with its two extreme factorizations.
ElasticityWitness fully_elastic_witness(const CyclicSemiring& S, const Rational& q);

// Appends K = k*gcd(min L, max L) fresh atoms above the largest atom dividing
// x; the resulting y has elasticity (max L + K)/(min L + K).
DenseElasticitySample dense_elasticity_sample(const CyclicSemiring& S, const Rational& x,
                                              const cpp_int& k);

UnionOfLengths union_of_lengths(const CyclicSemiring& S, const cpp_int& k,
                                const OracleBudget& budget);
LocalElasticities local_elasticities(const CyclicSemiring& S, const cpp_int& k,
                                     const OracleBudget& budget);

// omega(1): infinite for r < 1, 1 for integer r, d(r) otherwise.
std::optional<cpp_int> omega_one(const CyclicSemiring& S);

// Budgeted search for omega(x) over the semiring atoms within the budget
// window. Certification is relative to that window; for r < 1 the window is
// an admitted truncation, so results there are never certified.
OmegaBound omega_bounded(const CyclicSemiring& S, const Rational& x,
                         const OracleBudget& budget);

// The bundle d(r)*r^k together with min L(d(r)*r^k - 1); its length grows
// linearly in k, which is what makes tau(1) infinite. Requires r > 1
// non-integer and k >= d(r).
TauWitness tau_witness(const CyclicSemiring& S, unsigned k);

TamenessReport tameness_report(const CyclicSemiring& S);

} // namespace geomfactor

#endif // GEOMFACTOR_INVARIANTS_HPP
