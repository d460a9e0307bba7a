#include <doctest.h>

#include <random>

#include "geomfactor/oracle.hpp"
#include "test_support.hpp"

using namespace geomfactor;
using gftest::Q;
using gftest::S;

namespace {

std::vector<Rational> atoms_579() {
    return {Q(5), Q(7), Q(9)};
}

} // namespace

TEST_CASE("enumeration over semiring atoms is exhaustive and ordered") {
    auto s = S(3, 2);
    auto result = enumerate_for_semiring(s, Q(3), complete_budget_for(s, Q(3)));
    CHECK_FALSE(result.truncated);
    REQUIRE(result.factorizations.size() == 2);
    CHECK(result.factorizations[0] == Factorization{{0, 3}});
    CHECK(result.factorizations[1] == Factorization{{1, 2}});
}

TEST_CASE("enumeration over explicit integer atoms") {
    OracleBudget budget;
    budget.max_length = 10;
    auto result = enumerate_factorizations(atoms_579(), Q(35), budget);
    CHECK_FALSE(result.truncated);
    REQUIRE(result.factorizations.size() == 4);
    // canonical: depth-first over indices ascending, coefficients descending
    CHECK(result.factorizations[0] == Factorization{{0, 7}});
    CHECK(result.factorizations[1] == Factorization{{0, 2}, {1, 1}, {2, 2}});
    CHECK(result.factorizations[2] == Factorization{{0, 1}, {1, 3}, {2, 1}});
    CHECK(result.factorizations[3] == Factorization{{1, 5}});
    std::multiset<cpp_int> lengths;
    for (const auto& z : result.factorizations)
        lengths.insert(z.length());
    CHECK(lengths == std::multiset<cpp_int>{5, 5, 5, 7});
}

TEST_CASE("zero has exactly the empty factorization") {
    auto result = enumerate_factorizations(atoms_579(), Q(0), OracleBudget{});
    REQUIRE(result.factorizations.size() == 1);
    CHECK(result.factorizations[0].empty());
    auto semiring_result = enumerate_for_semiring(S(3, 2), Q(0), OracleBudget{});
    REQUIRE(semiring_result.factorizations.size() == 1);
    CHECK(semiring_result.factorizations[0].empty());
}

TEST_CASE("atom list validation") {
    CHECK_THROWS_AS(enumerate_factorizations({Q(5), Q(5)}, Q(10), OracleBudget{}),
                    usage_error);
    CHECK_THROWS_AS(enumerate_factorizations({Q(0)}, Q(1), OracleBudget{}), usage_error);
}

TEST_CASE("semiring fast path agrees with the plain knapsack") {
    std::mt19937_64 rng(8001);
    for (auto params : {std::pair{3, 2}, {5, 2}, {2, 3}}) {
        auto s = S(params.first, params.second);
        for (int trial = 0; trial < 20; ++trial) {
            Rational x = gftest::random_member(rng, s, 5, 3);
            OracleBudget budget;
            budget.max_exponent = 5;
            budget.max_length = 14;
            auto fast = enumerate_for_semiring(s, x, budget);
            auto plain = enumerate_factorizations(semiring_atoms(s, budget.max_exponent), x,
                                                  budget);
            // The plain path flags truncation pessimistically; compare the
            // in-budget factorization lists, which must agree exactly.
            REQUIRE(fast.factorizations.size() == plain.factorizations.size());
            for (std::size_t i = 0; i < fast.factorizations.size(); ++i)
                CHECK(fast.factorizations[i] == plain.factorizations[i]);
        }
    }
}

TEST_CASE("parallel enumeration is byte-identical to the serial reference") {
    std::mt19937_64 rng(8002);
    for (auto params : {std::pair{3, 2}, {8, 3}, {2, 3}}) {
        auto s = S(params.first, params.second);
        for (int trial = 0; trial < 15; ++trial) {
            Rational x = gftest::random_member(rng, s, 8, 5);
            OracleBudget budget;
            budget.max_exponent = 8;
            budget.max_length = 20;
            auto parallel = enumerate_for_semiring(s, x, budget);
            auto serial = enumerate_for_semiring_serial(s, x, budget);
            CHECK(parallel.truncated == serial.truncated);
            REQUIRE(parallel.factorizations.size() == serial.factorizations.size());
            for (std::size_t i = 0; i < parallel.factorizations.size(); ++i)
                CHECK(parallel.factorizations[i] == serial.factorizations[i]);
        }
    }
    auto plain_parallel = enumerate_factorizations(atoms_579(), Q(140), OracleBudget{});
    auto plain_serial = enumerate_factorizations_serial(atoms_579(), Q(140), OracleBudget{});
    REQUIRE(plain_parallel.factorizations.size() == plain_serial.factorizations.size());
    for (std::size_t i = 0; i < plain_parallel.factorizations.size(); ++i)
        CHECK(plain_parallel.factorizations[i] == plain_serial.factorizations[i]);
}

TEST_CASE("enumeration is deterministic across repeated runs") {
    auto s = S(3, 2);
    Rational x(cpp_int(81), cpp_int(8));
    auto budget = complete_budget_for(s, x);
    auto first = enumerate_for_semiring(s, x, budget);
    auto second = enumerate_for_semiring(s, x, budget);
    REQUIRE(first.factorizations.size() == second.factorizations.size());
    for (std::size_t i = 0; i < first.factorizations.size(); ++i)
        CHECK(first.factorizations[i] == second.factorizations[i]);
}

TEST_CASE("every emitted factorization evaluates to the target") {
    std::mt19937_64 rng(8003);
    auto s = S(5, 2);
    for (int trial = 0; trial < 10; ++trial) {
        Rational x = gftest::random_member(rng, s, 8, 5);
        auto all = enumerate_for_semiring(s, x, complete_budget_for(s, x));
        for (const auto& z : all.factorizations)
            CHECK(evaluate(s, z) == x);
    }
}

TEST_CASE("length sets through the oracle") {
    auto s32 = S(3, 2);
    auto ls = oracle_length_set_for_semiring(s32, Q(189, 16),
                                             complete_budget_for(s32, Q(189, 16)));
    CHECK_FALSE(ls.truncated);
    CHECK(ls.lengths == std::set<cpp_int>{3, 4, 5, 6});

    OracleBudget small;
    small.max_exponent = 12;
    small.max_length = 10;
    auto truncated = oracle_length_set_for_semiring(S(2, 3), Q(2), small);
    CHECK(truncated.truncated);
    CHECK(truncated.lengths == std::set<cpp_int>{2, 3, 4, 5, 6, 7, 8, 9, 10});

    auto atom = oracle_length_set_for_semiring(s32, Q(3, 2), complete_budget_for(s32, Q(3, 2)));
    CHECK(atom.lengths == std::set<cpp_int>{1});
}

TEST_CASE("catenary degrees from complete enumerations") {
    auto s32 = S(3, 2);
    CHECK(oracle_catenary(enumerate_for_semiring(s32, Q(3), complete_budget_for(s32, Q(3)))) ==
          3);
    CHECK(oracle_catenary(enumerate_for_semiring(s32, Q(3, 2),
                                                 complete_budget_for(s32, Q(3, 2)))) == 0);
    OracleBudget budget;
    budget.max_length = 10;
    CHECK(oracle_catenary(atoms_579(), Q(35), budget) == 5);

    auto trunc = enumerate_for_semiring(S(2, 3), Q(2), OracleBudget{});
    CHECK_THROWS_AS(oracle_catenary(trunc), truncated_enumeration);
}

TEST_CASE("parallel catenary kernel matches the serial reference") {
    std::mt19937_64 rng(8004);
    auto s = S(3, 2);
    for (int trial = 0; trial < 10; ++trial) {
        Rational x = gftest::random_member(rng, s, 9, 5);
        auto all = enumerate_for_semiring(s, x, complete_budget_for(s, x));
        CHECK(oracle_catenary(all) == oracle_catenary_serial(all));
    }
}

TEST_CASE("omega search certifies small cases and finds witnesses") {
    auto s32 = S(3, 2);
    auto div32 = [&](const Rational& a, const Rational& b) { return divides(s32, a, b); };
    OracleBudget budget66;
    budget66.max_exponent = 6;
    budget66.max_bundle = 6;
    auto result = oracle_omega(semiring_atoms(s32, 6), Q(1), budget66, div32);
    CHECK(result.value == 2);
    CHECK(result.certified);

    auto s2 = S(2);
    auto div2 = [&](const Rational& a, const Rational& b) { return divides(s2, a, b); };
    auto integer_case = oracle_omega(semiring_atoms(s2, 6), Q(1), budget66, div2);
    CHECK(integer_case.value == 1);
    CHECK(integer_case.certified);

    // r < 1: the search value grows with the budget and never certifies.
    auto s23 = S(2, 3);
    auto div23 = [&](const Rational& a, const Rational& b) { return divides(s23, a, b); };
    cpp_int previous = 0;
    for (unsigned exp : {3u, 5u, 7u}) {
        OracleBudget budget;
        budget.max_exponent = exp;
        budget.max_bundle = exp + 3;
        auto r = oracle_omega(semiring_atoms(s23, exp), Q(2), budget, div23);
        CHECK_FALSE(r.certified);
        CHECK(r.value >= previous);
        CHECK(r.value >= exp); // witness family keeps pace with the window
        previous = r.value;
    }
}

TEST_CASE("omega of an atom is at least one") {
    auto s23 = S(2, 3);
    auto div = [&](const Rational& a, const Rational& b) { return divides(s23, a, b); };
    OracleBudget budget;
    budget.max_exponent = 3;
    budget.max_bundle = 3;
    auto result = oracle_omega(semiring_atoms(s23, 3), Q(2, 3), budget, div);
    CHECK(result.value >= 1);
}

TEST_CASE("complete budgets really are complete") {
    auto s = S(3, 2);
    Rational x(81);
    auto budget = complete_budget_for(s, x);
    auto all = enumerate_for_semiring(s, x, budget);
    CHECK_FALSE(all.truncated);
    // min(atom)=1, so no factorization is longer than floor(x)
    for (const auto& z : all.factorizations)
        CHECK(z.length() <= 81);
    CHECK_THROWS_AS(complete_budget_for(S(2, 3), Q(2)), unsupported);
}
