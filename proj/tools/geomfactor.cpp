// geomfactor: exact factorization invariants of cyclic rational semirings
// S_r = <r^n | n >= 0> and of numerical monoids, with a brute-force
// verification mode. All output is exact: integers and "p/q" strings, never
// floating point.
//
// Exit codes: 0 success, 1 property violation (verify), 2 usage/parse,
// 3 not a member, 4 not atomic, 5 infinite object requested.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "geomfactor/invariants.hpp"
#include "geomfactor/numerical.hpp"
#include "geomfactor/oracle.hpp"
#include "geomfactor/serialization.hpp"

using namespace geomfactor;
using nlohmann::json;

namespace {

OracleBudget resolve_budget(const std::string& flag_value) {
    if (!flag_value.empty())
        return parse_budget(flag_value);
    if (const char* env = std::getenv("GEOMFACTOR_BUDGET"))
        return parse_budget(env);
    return OracleBudget::defaults();
}

const char* class_name(SemiringClass cls) {
    switch (cls) {
    case SemiringClass::FactorialInteger: return "factorial_integer";
    case SemiringClass::AtomicNonInteger: return "atomic_non_integer";
    case SemiringClass::Antimatter: return "antimatter";
    }
    return "unknown";
}

int cmd_classify(const std::string& r_text) {
    CyclicSemiring s = classify(Rational::parse(r_text));
    json out;
    out["subject"] = s.r().str();
    out["class"] = class_name(s.cls());
    switch (s.cls()) {
    case SemiringClass::FactorialInteger:
        out["atoms"] = "{1}";
        break;
    case SemiringClass::AtomicNonInteger:
        out["atoms"] = "{(" + s.r().str() + ")^n | n >= 0}";
        break;
    case SemiringClass::Antimatter:
        out["atoms"] = "{}";
        break;
    }
    if (s.atomic())
        out["bf_monoid"] = s.r() >= Rational(1);
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_factor(const std::string& r_text, const std::string& x_text, const std::string& form,
               const std::string& budget_text) {
    CyclicSemiring s = classify(Rational::parse(r_text));
    Rational x = Rational::parse(x_text);
    json out;
    out["subject"] = s.r().str();
    out["x"] = x.str();
    out["form"] = form;
    if (form == "min") {
        Factorization z = min_length_factorization(s, x);
        out["factorization"] = factorization_to_json(z);
        out["length"] = json_int(z.length());
    } else if (form == "max") {
        auto z = max_length_factorization(s, x);
        if (!z)
            throw infinite_object("sup L(x) = inf; no maximum-length factorization exists");
        out["factorization"] = factorization_to_json(*z);
        out["length"] = json_int(z->length());
    } else if (form == "all") {
        if (!member(s, x))
            throw not_member(x.str() + " is not a member of S_" + s.r().str());
        OracleBudget budget = resolve_budget(budget_text);
        if (s.r() >= Rational(1))
            budget = complete_budget_for(s, x, budget);
        auto all = enumerate_for_semiring(s, x, budget);
        json list = json::array();
        for (const auto& z : all.factorizations)
            list.push_back(factorization_to_json(z));
        out["factorizations"] = list;
        out["count"] = all.factorizations.size();
        out["truncated"] = all.truncated;
        out["budget"] = budget_to_json(budget);
    } else {
        throw usage_error("--form must be min, max, or all");
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_invariants(const std::string& r_text) {
    CyclicSemiring s = classify(Rational::parse(r_text));
    json out;
    out["subject"] = s.r().str();
    json delta = json::array();
    for (const auto& d : delta_set(s))
        delta.push_back(json_int(d));
    out["delta_set"] = delta;
    out["catenary_degree"] = json_int(catenary_degree(s));
    auto rho = monoid_elasticity(s);
    out["elasticity"] = elasticity_to_string(rho.value);
    out["elasticity_accepted"] = rho.accepted;
    auto tameness = tameness_report(s);
    out["omega_one"] = extended_to_string(tameness.omega_one);
    out["locally_tame"] = tameness.locally_tame;
    out["globally_tame"] = tameness.globally_tame;
    out["bf_monoid"] = s.r() >= Rational(1);
    std::cout << out.dump() << "\n";
    return 0;
}

std::string csv_quote(const std::string& cell) {
    if (cell.find_first_of(",\"") == std::string::npos)
        return cell;
    std::string quoted = "\"";
    for (char c : cell) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void csv_row(const std::string& a, const std::string& b, const std::string& c) {
    std::cout << csv_quote(a) << "," << csv_quote(b) << "," << csv_quote(c) << "\n";
}

int cmd_compare(const std::string& r_text, long long n, long long d, long long k) {
    CyclicSemiring s = classify(Rational::parse(r_text));
    if (!s.atomic())
        throw not_atomic("S_" + s.r().str() + " is antimatter; nothing to compare");
    NumericalMonoid monoid = NumericalMonoid::arithmetic(n, d, k);

    std::string gens = "<";
    for (std::size_t i = 0; i < monoid.generators().size(); ++i) {
        if (i)
            gens += ",";
        gens += monoid.generators()[i].str();
    }
    gens += ">";

    std::string nm_lengths, nm_delta, nm_rho, nm_catenary, nm_tame, nm_omega;
    if (monoid.is_naturals()) {
        nm_lengths = "singletons";
        nm_delta = "{}";
        nm_rho = "1/1 (accepted)";
        nm_catenary = "0";
        nm_tame = "yes";
        nm_omega = "1";
    } else {
        auto forms = monoid.closed_forms();
        nm_lengths = "arithmetic progressions, difference " + forms.delta.begin()->str();
        nm_delta = "{" + forms.delta.begin()->str() + "}";
        nm_rho = forms.rho.str() + " (accepted)";
        nm_catenary = forms.catenary.str();
        nm_tame = "yes";
        nm_omega = "inf";
    }

    auto rho = monoid_elasticity(s);
    auto tameness = tameness_report(s);
    std::string sr_lengths =
        s.integer() ? "singletons"
                    : "arithmetic progressions, difference " + s.length_difference().str();
    std::string sr_delta = "{}";
    auto ds = delta_set(s);
    if (!ds.empty())
        sr_delta = "{" + ds.begin()->str() + "}";
    std::string sr_rho = elasticity_to_string(rho.value) +
                         (rho.accepted ? " (accepted)" : " (not accepted)");

    csv_row("invariant", gens, "S_" + s.r().str());
    csv_row("length_sets", nm_lengths, sr_lengths);
    csv_row("delta_set", nm_delta, sr_delta);
    csv_row("elasticity", nm_rho, sr_rho);
    csv_row("catenary_degree", nm_catenary, catenary_degree(s).str());
    csv_row("globally_tame", nm_tame, tameness.globally_tame ? "yes" : "no");
    csv_row("omega", nm_omega,
            "omega(1) = " + extended_to_string(tameness.omega_one));
    if (!monoid.is_naturals())
        csv_row("frobenius", monoid.frobenius().str(), "n/a");
    return 0;
}

// ---- verify: oracle-versus-closed-form property suites ----

struct VerifyContext {
    std::uint64_t seed;
    OracleBudget budget;
    std::string fault; // empty, or "length-difference"
    bool failed = false;

    void report(const std::string& suite, int checks) const {
        json line;
        line["suite"] = suite;
        line["checks"] = checks;
        line["status"] = "ok";
        std::cout << line.dump() << "\n";
    }

    void fail(const std::string& suite, const json& counterexample) {
        failed = true;
        json line;
        line["suite"] = suite;
        line["status"] = "violation";
        line["counterexample"] = counterexample;
        std::cout << line.dump() << "\n";
    }
};

Factorization sample_factorization(std::mt19937_64& rng, unsigned max_atoms,
                                   unsigned max_exponent) {
    Factorization z;
    unsigned atoms = 1 + static_cast<unsigned>(rng() % max_atoms);
    for (unsigned i = 0; i < atoms; ++i)
        z.add(static_cast<Factorization::exponent_type>(rng() % (max_exponent + 1)), 1);
    return z;
}

bool verify_lengths(VerifyContext& ctx) {
    const int samples = 40;
    int checks = 0;
    for (const char* r_text : {"3/2", "5/2", "4/3", "7/4", "2/3", "3/5"}) {
        CyclicSemiring s = classify(Rational::parse(r_text));
        std::mt19937_64 rng(ctx.seed ^ std::hash<std::string>{}(r_text));
        for (int i = 0; i < samples; ++i) {
            Rational x = evaluate(s, sample_factorization(rng, 10, 6));
            LengthSet closed = length_set(s, x);
            if (!ctx.fault.empty() && ctx.fault == "length-difference" &&
                closed.difference != 0)
                closed.difference += 1;
            std::set<cpp_int> expected, seen;
            if (s.greater_than_one()) {
                auto oracle = oracle_length_set_for_semiring(s, x, complete_budget_for(s, x));
                if (oracle.truncated) {
                    ctx.fail("lengths", {{"r", r_text}, {"x", x.str()},
                                         {"reason", "enumeration unexpectedly truncated"}});
                    return false;
                }
                seen = oracle.lengths;
                for (const auto& v : closed.values_up_to(closed.max()))
                    expected.insert(v);
            } else {
                OracleBudget budget;
                budget.max_exponent = 30;
                budget.max_length = 24;
                seen = oracle_length_set_for_semiring(s, x, budget).lengths;
                for (const auto& v : closed.values_up_to(24))
                    expected.insert(v);
            }
            ++checks;
            if (seen != expected) {
                json counter;
                counter["r"] = r_text;
                counter["x"] = x.str();
                counter["closed_form"] = length_set_to_json(closed);
                json oracle_lengths = json::array();
                for (const auto& v : seen)
                    oracle_lengths.push_back(json_int(v));
                counter["oracle_lengths"] = oracle_lengths;
                ctx.fail("lengths", counter);
                return false;
            }
        }
    }
    ctx.report("lengths", checks);
    return true;
}

bool verify_catenary(VerifyContext& ctx) {
    const int samples = 25;
    int checks = 0;
    json attained_per_r = json::object();
    for (const char* r_text : {"3/2", "5/2", "4/3", "7/4"}) {
        CyclicSemiring s = classify(Rational::parse(r_text));
        std::mt19937_64 rng(ctx.seed ^ std::hash<std::string>{}(r_text));
        cpp_int bound = catenary_degree(s);
        cpp_int attained = 0;
        for (int i = 0; i <= samples; ++i) {
            // the element n(r) always realizes the bound; sample it first
            Rational x = i == 0 ? Rational(s.a())
                                : evaluate(s, sample_factorization(rng, 8, 5));
            auto enumeration = enumerate_for_semiring(s, x, complete_budget_for(s, x));
            cpp_int c = oracle_catenary(enumeration);
            ++checks;
            if (c > bound) {
                ctx.fail("catenary", {{"r", r_text}, {"x", x.str()},
                                      {"oracle", c.str()}, {"bound", bound.str()}});
                return false;
            }
            attained = std::max(attained, c);
        }
        if (attained != bound) {
            ctx.fail("catenary", {{"r", r_text}, {"max_attained", attained.str()},
                                  {"bound", bound.str()}});
            return false;
        }
        attained_per_r[r_text] = json_int(attained);
    }
    json line;
    line["suite"] = "catenary";
    line["checks"] = checks;
    line["status"] = "ok";
    line["max_attained"] = attained_per_r;
    std::cout << line.dump() << "\n";
    return true;
}

bool verify_unions(VerifyContext& ctx) {
    int checks = 0;
    for (const char* r_text : {"3/2", "2/3"}) {
        CyclicSemiring s = classify(Rational::parse(r_text));
        cpp_int lo = std::min(s.a(), s.b());
        cpp_int hi = std::max(s.a(), s.b());
        cpp_int delta = s.length_difference();
        for (cpp_int k = 1; k <= hi + 2; ++k) {
            UnionOfLengths uk = union_of_lengths(s, k, ctx.budget);
            ++checks;
            bool ok;
            if (k < lo)
                ok = uk.set.singleton() && uk.set.start == k;
            else if (k < hi)
                ok = uk.set.is_infinite() && uk.set.start == k;
            else
                ok = uk.set.is_infinite() && uk.set.start < k && uk.lower_bound_certified &&
                     uk.set.start == lo + ((k - lo) % delta);
            if (!ok) {
                ctx.fail("unions", {{"r", r_text}, {"k", k.str()},
                                    {"set", length_set_to_json(uk.set)}});
                return false;
            }
        }
        // witness for the band at max{n,d}: trading the whole of k*1 once
        // yields length k - delta alongside k
        cpp_int k = hi;
        Rational witness = s.greater_than_one() ? Rational(k) : Rational(k) * s.r();
        LengthSet ls = length_set(s, witness);
        ++checks;
        if (!ls.contains(k) || !ls.contains(k - delta)) {
            ctx.fail("unions", {{"r", r_text}, {"witness", witness.str()},
                                {"set", length_set_to_json(ls)}});
            return false;
        }
    }
    ctx.report("unions", checks);
    return true;
}

bool verify_omega(VerifyContext& ctx) {
    int checks = 0;
    for (const char* r_text : {"3/2", "5/2", "4/3"}) {
        CyclicSemiring s = classify(Rational::parse(r_text));
        OracleBudget budget;
        budget.max_exponent = 5;
        budget.max_bundle = 5 * (s.b() - 1) + 1;
        auto bound = omega_bounded(s, Rational(1), budget);
        ++checks;
        if (!bound.certified || bound.value != s.b()) {
            ctx.fail("omega", {{"r", r_text}, {"value", bound.value.str()},
                               {"certified", bound.certified}});
            return false;
        }
    }
    {
        CyclicSemiring s = classify(Rational::parse("2/3"));
        OracleBudget budget;
        budget.max_exponent = 7;
        budget.max_bundle = 10;
        auto bound = omega_bounded(s, Rational(1), budget);
        ++checks;
        if (bound.certified || bound.value < 8) {
            ctx.fail("omega", {{"r", "2/3"}, {"value", bound.value.str()},
                               {"certified", bound.certified}});
            return false;
        }
    }
    ctx.report("omega", checks);
    return true;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& budget_text,
               const std::string& fault) {
    if (!fault.empty() && fault != "length-difference")
        throw usage_error("unknown fault '" + fault + "' (supported: length-difference)");
    VerifyContext ctx{seed, resolve_budget(budget_text), fault};
    bool ran = false;
    if (suite == "lengths" || suite == "all") {
        ran = true;
        if (!verify_lengths(ctx))
            return 1;
    }
    if (suite == "catenary" || suite == "all") {
        ran = true;
        if (!verify_catenary(ctx))
            return 1;
    }
    if (suite == "unions" || suite == "all") {
        ran = true;
        if (!verify_unions(ctx))
            return 1;
    }
    if (suite == "omega" || suite == "all") {
        ran = true;
        if (!verify_omega(ctx))
            return 1;
    }
    if (!ran)
        throw usage_error("--suite must be lengths, catenary, unions, omega, or all");
    json summary;
    summary["status"] = "pass";
    summary["seed"] = seed;
    std::cout << summary.dump() << "\n";
    return 0;
}

int cmd_explore(const std::string& r_text, const std::string& q_text,
                const std::string& budget_text) {
    CyclicSemiring s = classify(Rational::parse(r_text));
    if (!s.atomic())
        throw not_atomic("S_" + s.r().str() + " is antimatter");
    if (s.integer() || !s.greater_than_one())
        throw usage_error("the conjecture concerns r > 1 with n(r) > d(r) + 1");
    if (s.a() == s.b() + 1)
        throw usage_error(
            "n(r) = d(r) + 1 is the settled regime; use the exact witness construction "
            "(fully elastic) instead");
    Rational q = Rational::parse(q_text);
    if (q <= Rational(1))
        throw usage_error("target elasticity must exceed 1");

    OracleBudget budget = resolve_budget(budget_text);
    unsigned max_exp = std::min(budget.max_exponent, 10u);
    json out;
    out["subject"] = s.r().str();
    out["target"] = q.str();
    out["budget"] = budget_to_json(budget);

    // Deterministic search over one- and two-pile minimum forms (coefficients
    // below n(r) make each candidate its own minimal factorization, so every
    // element is visited once).
    auto valued = [&](const Factorization& zmin) -> bool {
        Rational x = evaluate(s, zmin);
        LengthSet ls = length_set(s, x);
        if (ls.singleton())
            return false;
        Rational rho(ls.max(), ls.start);
        if (rho != q)
            return false;
        out["found"] = true;
        out["x"] = x.str();
        out["min_length"] = json_int(ls.start);
        out["max_length"] = json_int(ls.max());
        out["elasticity"] = rho.str();
        out["witness_min_form"] = factorization_to_json(min_length_factorization(s, x));
        std::cout << out.dump() << "\n";
        return true;
    };

    for (cpp_int c = 1; c < s.a(); ++c)
        for (unsigned e = 1; e <= max_exp; ++e)
            if (valued(Factorization{{e, c}}))
                return 0;
    for (unsigned e1 = 0; e1 <= max_exp; ++e1)
        for (unsigned e2 = e1 + 1; e2 <= max_exp; ++e2)
            for (cpp_int c1 = 1; c1 < s.a(); ++c1)
                for (cpp_int c2 = 1; c2 < s.a(); ++c2)
                    if (valued(Factorization{{e1, c1}, {e2, c2}}))
                        return 0;

    out["found"] = false;
    out["note"] = "no witness within budget; this is not a nonexistence claim";
    std::cout << out.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact factorization invariants of cyclic rational semirings"};
    app.require_subcommand(1);

    std::string r_text, x_text, q_text;
    std::string form = "min";
    std::string budget_text;
    std::string suite = "all";
    std::string fault;
    std::uint64_t seed = 1;
    long long n = 0, d = 0, k = 0;

    auto* classify_cmd = app.add_subcommand("classify", "atomicity class of S_r");
    classify_cmd->add_option("r", r_text, "parameter r as p/q")->required();

    auto* factor_cmd = app.add_subcommand("factor", "factorizations of x in S_r");
    factor_cmd->add_option("r", r_text)->required();
    factor_cmd->add_option("x", x_text)->required();
    factor_cmd->add_option("--form", form, "min, max, or all");
    factor_cmd->add_option("--budget", budget_text, "max_exponent,max_length,max_bundle");

    auto* invariants_cmd = app.add_subcommand("invariants", "invariant report for S_r");
    invariants_cmd->add_option("r", r_text)->required();

    auto* compare_cmd =
        app.add_subcommand("compare", "S_r versus the numerical monoid <n,n+d,...,n+kd>");
    compare_cmd->add_option("r", r_text)->required();
    compare_cmd->add_option("n", n)->required();
    compare_cmd->add_option("d", d)->required();
    compare_cmd->add_option("k", k)->required();

    auto* verify_cmd = app.add_subcommand("verify", "oracle-versus-closed-form checks");
    verify_cmd->add_option("--suite", suite, "lengths, catenary, unions, omega, or all");
    verify_cmd->add_option("--seed", seed, "deterministic sampling seed");
    verify_cmd->add_option("--budget", budget_text, "max_exponent,max_length,max_bundle");
    verify_cmd->add_option("--inject-fault", fault,
                           "negative control: perturb a closed form (length-difference)");

    auto* explore_cmd =
        app.add_subcommand("explore", "search for an element with a target elasticity");
    explore_cmd->add_option("r", r_text)->required();
    explore_cmd->add_option("q", q_text)->required();
    explore_cmd->add_option("--budget", budget_text);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed())
            return cmd_classify(r_text);
        if (factor_cmd->parsed())
            return cmd_factor(r_text, x_text, form, budget_text);
        if (invariants_cmd->parsed())
            return cmd_invariants(r_text);
        if (compare_cmd->parsed())
            return cmd_compare(r_text, n, d, k);
        if (verify_cmd->parsed())
            return cmd_verify(suite, seed, budget_text, fault);
        if (explore_cmd->parsed())
            return cmd_explore(r_text, q_text, budget_text);
    } catch (const not_member& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const not_atomic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const infinite_object& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
