/**
 * @file oracle.hpp
 * @brief Brute-force ground truth: bounded exhaustive enumeration of
 *        factorizations over an explicit list of atoms.
 *
 * The oracle never consults the closed forms it is used to certify. Output
 * is canonical (depth-first over atom indices ascending, coefficients
 * descending) and byte-identical for identical inputs and budgets; the
 * OpenMP kernels split the search over top-level branches and merge results
 * back in branch order, so thread count never changes the output. A plain
 * serial reference of every parallel kernel is kept and compared in tests
 * and in the benchmark target.
 */
#ifndef GEOMFACTOR_ORACLE_HPP
#define GEOMFACTOR_ORACLE_HPP

#include <functional>
#include <set>
#include <vector>

#include "geomfactor/factorization.hpp"
#include "geomfactor/semiring.hpp"

namespace geomfactor {

struct OracleBudget {
    unsigned max_exponent = 12; // semiring atoms r^0..r^max_exponent
    cpp_int max_length = 40;    // factorizations longer than this are cut
    cpp_int max_bundle = 8;     // bundle size cap for omega searches

    static OracleBudget defaults() { return OracleBudget{}; }
};

struct EnumerationResult {
    std::vector<Factorization> factorizations;
    // True when the enumeration may be incomplete: the length cap bound some
    // branch, or the atom window is an admitted truncation (always the case
    // for semiring targets with r < 1).
    bool truncated = false;
};

// Every factorization over the given atoms (keys are list indices) with
// value exactly x and length within budget. Complete whenever min(atoms) >= 1
// and the cap allows length floor(x).
EnumerationResult enumerate_factorizations(const std::vector<Rational>& atoms,
                                           const Rational& x, const OracleBudget& budget);
EnumerationResult enumerate_factorizations_serial(const std::vector<Rational>& atoms,
                                                  const Rational& x,
                                                  const OracleBudget& budget);

// Same over the semiring atom window r^0..r^max_exponent (keys are
// exponents), with congruence pruning to keep the search linear where digit
// arithmetic forces coefficients.
EnumerationResult enumerate_for_semiring(const CyclicSemiring& S, const Rational& x,
                                         const OracleBudget& budget);
EnumerationResult enumerate_for_semiring_serial(const CyclicSemiring& S, const Rational& x,
                                                const OracleBudget& budget);

// A budget that makes the semiring enumeration provably complete for x
// (possible exactly when r >= 1): window floor(log_r x), length cap floor(x).
OracleBudget complete_budget_for(const CyclicSemiring& S, const Rational& x,
                                 const OracleBudget& base = OracleBudget::defaults());

struct OracleLengthSet {
    std::set<cpp_int> lengths;
    bool truncated = false;
};

OracleLengthSet oracle_length_set(const std::vector<Rational>& atoms, const Rational& x,
                                  const OracleBudget& budget);
OracleLengthSet oracle_length_set_for_semiring(const CyclicSemiring& S, const Rational& x,
                                               const OracleBudget& budget);

// Smallest N such that the graph on Z(x) with edges {distance <= N} is
// connected: threshold sweep with incremental component merging. Throws
// truncated_enumeration when the enumeration was cut.
cpp_int oracle_catenary(const EnumerationResult& enumeration);
cpp_int oracle_catenary(const std::vector<Rational>& atoms, const Rational& x,
                        const OracleBudget& budget);
cpp_int oracle_catenary_serial(const EnumerationResult& enumeration);

using DivisibilityTest = std::function<bool(const Rational& x, const Rational& y)>;

struct OracleOmega {
    cpp_int value;  // largest minimal divisible bundle size found
    bool certified; // cutoff argument closed the search within the window
};

// Searches atom bundles (size <= max_bundle, indices within the atom list)
// whose value x divides, keeping the maximal minimal-by-inclusion one. The
// certificate: when for every atom index i there is a least beta_i <= budget
// with x | beta_i*atom_i, and exhausting the finite box {z : z_i < beta_i}
// finds no divisible bundle, every minimal divisible bundle is one of the
// beta_i*atom_i, so the search is closed.
OracleOmega oracle_omega(const std::vector<Rational>& atoms, const Rational& x,
                         const OracleBudget& budget, const DivisibilityTest& divisibility);

std::vector<Rational> semiring_atoms(const CyclicSemiring& S, unsigned max_exponent);

} // namespace geomfactor

#endif // GEOMFACTOR_ORACLE_HPP
