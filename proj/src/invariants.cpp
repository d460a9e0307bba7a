#include "geomfactor/invariants.hpp"

#include <algorithm>

#include "geomfactor/errors.hpp"

namespace geomfactor {

namespace {

void require_atomic(const CyclicSemiring& S) {
    if (!S.atomic())
        throw not_atomic("S_" + S.r().str() + " is antimatter");
}

Factorization::exponent_type checked_exponent(const cpp_int& v) {
    if (v < 0 || v > 1000000)
        throw unsupported("witness exponent out of range: " + v.str());
    return static_cast<Factorization::exponent_type>(v);
}

} // namespace

LengthSet length_set(const CyclicSemiring& S, const Rational& x) {
    require_atomic(S);
    if (x.is_zero())
        return LengthSet{0, 0, cpp_int(1)};
    Factorization zmin = min_length_factorization(S, x);
    cpp_int lmin = zmin.length();
    if (S.integer())
        return LengthSet{lmin, 0, cpp_int(1)};
    if (S.greater_than_one()) {
        auto zmax = max_length_factorization(S, x);
        cpp_int lmax = zmax->length();
        if (lmax == lmin)
            return LengthSet{lmin, 0, cpp_int(1)};
        cpp_int diff = S.a() - S.b();
        if ((lmax - lmin) % diff != 0)
            throw error("length extremes are not congruent modulo n(r) - d(r)");
        return LengthSet{lmin, diff, (lmax - lmin) / diff + 1};
    }
    // r < 1: the length set is infinite exactly when some digit reaches n(r).
    for (const auto& [e, c] : zmin.terms())
        if (c >= S.a())
            return LengthSet{lmin, S.b() - S.a(), std::nullopt};
    return LengthSet{lmin, 0, cpp_int(1)};
}

std::set<cpp_int> delta_set(const CyclicSemiring& S) {
    require_atomic(S);
    if (S.integer())
        return {};
    return {S.length_difference()};
}

cpp_int catenary_degree(const CyclicSemiring& S) {
    require_atomic(S);
    if (S.integer())
        return 0;
    return std::max(S.a(), S.b());
}

Rational elasticity_of_zero() {
    return Rational(1);
}

ElasticityValue elasticity(const CyclicSemiring& S, const Rational& x) {
    if (x.is_zero())
        return elasticity_of_zero();
    LengthSet ls = length_set(S, x);
    if (ls.is_infinite())
        return std::nullopt;
    return Rational(ls.max(), ls.start);
}

MonoidElasticity monoid_elasticity(const CyclicSemiring& S) {
    require_atomic(S);
    if (S.integer())
        return MonoidElasticity{Rational(1), true};
    return MonoidElasticity{std::nullopt, !S.greater_than_one()};
}

ElasticityWitness fully_elastic_witness(const CyclicSemiring& S, const Rational& q) {
    require_atomic(S);
    if (S.integer() || !S.greater_than_one() || S.a() != S.b() + 1)
        throw unsupported("witness construction needs r > 1 with n(r) = d(r) + 1");
    if (q <= Rational(1))
        throw invalid_target("target elasticity must exceed 1");

    const cpp_int& d = S.b();
    cpp_int m = d / q.den() + 1; // least m with m*d(q) > d(r)
    cpp_int k_val = m * (q.num() - q.den());
    cpp_int t_val = m * q.den() - d;
    auto k = checked_exponent(k_val);
    auto t = checked_exponent(t_val);

    Factorization zmin;
    zmin.add(k, d);
    for (Factorization::exponent_type i = 1; i <= t; ++i)
        zmin.add(k + i, 1);

    Factorization zmax;
    zmax.add(0, d + 1);
    for (Factorization::exponent_type i = 1; i < k; ++i)
        zmax.add(i, 1);
    for (Factorization::exponent_type i = 1; i <= t; ++i)
        zmax.add(k + i, 1);

    Rational x = evaluate(S, zmin);
    if (evaluate(S, zmax) != x)
        throw error("witness factorizations disagree");
    Rational rho(zmax.length(), zmin.length());
    if (rho != q)
        throw error("witness elasticity mismatch");
    return ElasticityWitness{x, std::move(zmin), std::move(zmax), rho};
}

DenseElasticitySample dense_elasticity_sample(const CyclicSemiring& S, const Rational& x,
                                              const cpp_int& k) {
    require_atomic(S);
    if (S.integer() || !S.greater_than_one())
        throw unsupported("dense elasticity construction needs non-integer r > 1");
    if (k < 1)
        throw invalid_target("padding multiplier must be positive");
    Factorization zmin = min_length_factorization(S, x);
    auto zmax = max_length_factorization(S, x);
    cpp_int lmin = zmin.length();
    cpp_int lmax = zmax->length();
    if (lmin == lmax)
        throw unique_factorization(x.str() + " has a unique factorization");

    // The largest atom dividing x is r^m for the top exponent m of the
    // minimum-length form; the maximum-length form never reaches higher.
    auto m = zmin.top_exponent();
    cpp_int K = k * gcd(lmin, lmax);
    auto padding = checked_exponent(K);
    Rational y = x;
    for (Factorization::exponent_type i = 1; i <= padding; ++i)
        y += S.atom(m + i);
    return DenseElasticitySample{y, Rational(lmax + K, lmin + K), K};
}

UnionOfLengths union_of_lengths(const CyclicSemiring& S, const cpp_int& k,
                                const OracleBudget& budget) {
    require_atomic(S);
    if (k < 1)
        throw usage_error("k must be a positive integer");
    if (S.integer())
        return UnionOfLengths{k, LengthSet{k, 0, cpp_int(1)}, true};

    cpp_int lo = std::min(S.a(), S.b());
    cpp_int hi = std::max(S.a(), S.b());
    cpp_int diff = S.length_difference();
    if (k < lo)
        return UnionOfLengths{k, LengthSet{k, 0, cpp_int(1)}, true};
    if (k < hi)
        return UnionOfLengths{k, LengthSet{k, diff, std::nullopt}, true};

    // k at or above max{n(r), d(r)}: lambda_k drops below k. Search a
    // deterministic pool of elements for length sets containing k, and report
    // whether the best hit matches the provable floor: a length set with more
    // than one value must start at min{n(r), d(r)} or above, in the residue
    // class of k modulo the difference.
    cpp_int floor_bound = lo + ((k - lo) % diff);
    cpp_int best = k; // k*1 is always a factorization of the element k
    auto consider = [&](const Rational& x) {
        LengthSet ls = length_set(S, x);
        if (ls.contains(k))
            best = std::min(best, ls.start);
    };
    for (cpp_int c = 1; c < hi + diff; ++c) {
        for (unsigned e = 0; e <= budget.max_exponent; ++e)
            consider(Rational(c) * S.atom(e));
    }
    cpp_int pool_top = hi + diff;
    cpp_int integer_cap = std::min(k, std::max(cpp_int(64), pool_top));
    for (cpp_int c = 1; c <= integer_cap; ++c)
        consider(Rational(c));
    consider(Rational(k));
    return UnionOfLengths{k, LengthSet{best, diff, std::nullopt}, best == floor_bound};
}

LocalElasticities local_elasticities(const CyclicSemiring& S, const cpp_int& k,
                                     const OracleBudget& budget) {
    UnionOfLengths uk = union_of_lengths(S, k, budget);
    if (uk.set.is_infinite())
        return LocalElasticities{uk.set.start, std::nullopt};
    return LocalElasticities{uk.set.start, uk.set.max()};
}

std::optional<cpp_int> omega_one(const CyclicSemiring& S) {
    require_atomic(S);
    if (S.integer())
        return cpp_int(1);
    if (!S.greater_than_one())
        return std::nullopt;
    return S.b();
}

OmegaBound omega_bounded(const CyclicSemiring& S, const Rational& x,
                         const OracleBudget& budget) {
    require_atomic(S);
    if (x.is_zero())
        throw usage_error("omega is defined on nonzero members");
    if (!member(S, x))
        throw not_member(x.str() + " is not a member of S_" + S.r().str());
    auto atoms = semiring_atoms(S, budget.max_exponent);
    auto result = oracle_omega(atoms, x, budget, [&S](const Rational& a, const Rational& b) {
        return divides(S, a, b);
    });
    // For r < 1 the atom window is a truncation of an infinite atom set, so
    // no finite search closes it.
    bool certified = result.certified && (S.integer() || S.greater_than_one());
    return OmegaBound{result.value, certified};
}

TauWitness tau_witness(const CyclicSemiring& S, unsigned k) {
    require_atomic(S);
    if (S.integer() || !S.greater_than_one())
        throw unsupported("tau witness needs non-integer r > 1");
    if (cpp_int(k) < S.b())
        throw unsupported("tau witness needs k >= d(r)");
    Factorization bundle;
    bundle.add(k, S.b());
    Rational remainder = evaluate(S, bundle) - Rational(1);
    Factorization zr = min_length_factorization(S, remainder);
    cpp_int len = zr.length();
    cpp_int expected = cpp_int(k) * (S.a() - S.b()) + S.b() - 1;
    if (len != expected)
        throw error("tau witness length mismatch");
    return TauWitness{std::move(bundle), std::move(remainder), len};
}

TamenessReport tameness_report(const CyclicSemiring& S) {
    require_atomic(S);
    bool tame = S.integer();
    return TamenessReport{tame, tame, omega_one(S)};
}

} // namespace geomfactor
