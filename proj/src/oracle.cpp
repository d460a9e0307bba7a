#include "geomfactor/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "geomfactor/errors.hpp"

namespace geomfactor {

namespace {

using boost::multiprecision::powm;
using detail::denominator_depth;
using detail::mod_inverse;

cpp_int floor_div(const Rational& q) {
    return q.num() / q.den();
}

// Runs fn(i) for i in [0, n), in parallel when built with OpenMP. Each slot
// is written by exactly one call, so results and flags are independent of
// the schedule.
template <typename Fn>
void run_branches(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
        fn(static_cast<std::size_t>(i));
}

template <typename Fn>
void run_branches_serial(std::size_t n, Fn&& fn) {
    for (std::size_t i = 0; i < n; ++i)
        fn(i);
}

struct BranchSlot {
    std::vector<Factorization> out;
    bool truncated = false;
};

EnumerationResult merge_slots(std::vector<BranchSlot>&& slots, bool pre_truncated) {
    EnumerationResult result;
    result.truncated = pre_truncated;
    std::size_t total = 0;
    for (const auto& s : slots)
        total += s.out.size();
    result.factorizations.reserve(total);
    for (auto& s : slots) {
        result.truncated |= s.truncated;
        for (auto& z : s.out)
            result.factorizations.push_back(std::move(z));
    }
    return result;
}

// ---- generic bounded knapsack over an explicit atom list ----

struct GenericSearch {
    const std::vector<Rational>& atoms;
    const cpp_int& max_length;
    bool complete; // length cap provably never cuts a factorization
    std::vector<Rational> suffix_max;

    GenericSearch(const std::vector<Rational>& atoms_, const Rational& x,
                  const cpp_int& max_length_)
        : atoms(atoms_), max_length(max_length_) {
        suffix_max.resize(atoms.size() + 1, Rational(0));
        for (std::size_t i = atoms.size(); i-- > 0;)
            suffix_max[i] = std::max(atoms[i], suffix_max[i + 1]);
        Rational min_atom = atoms.empty() ? Rational(0) : atoms[0];
        for (const auto& a : atoms)
            min_atom = std::min(min_atom, a);
        complete = !atoms.empty() && min_atom >= Rational(1) &&
                   max_length >= floor_div(x / min_atom);
    }

    void rec(std::size_t i, const Rational& v, const cpp_int& lrem,
             std::vector<std::pair<Factorization::exponent_type, cpp_int>>& stack,
             BranchSlot& slot) const {
        if (v.is_zero()) {
            Factorization z;
            for (const auto& [e, c] : stack)
                z.add(e, c);
            slot.out.push_back(std::move(z));
            return;
        }
        if (i == atoms.size())
            return;
        if (Rational(lrem) * suffix_max[i] < v) {
            // Unreachable within the remaining length budget. When the cap
            // can bind, longer factorizations may have been cut here.
            slot.truncated |= !complete;
            return;
        }
        cpp_int by_value = floor_div(v / atoms[i]);
        cpp_int amax = by_value;
        if (amax > lrem) {
            slot.truncated |= !complete;
            amax = lrem;
        }
        for (cpp_int alpha = amax; alpha >= 0; --alpha) {
            if (alpha != 0)
                stack.emplace_back(static_cast<Factorization::exponent_type>(i), alpha);
            rec(i + 1, v - Rational(alpha) * atoms[i], lrem - alpha, stack, slot);
            if (alpha != 0)
                stack.pop_back();
        }
    }
};

template <typename Runner>
EnumerationResult enumerate_generic(const std::vector<Rational>& atoms, const Rational& x,
                                    const OracleBudget& budget, Runner&& runner) {
    for (const auto& a : atoms)
        if (!a.is_positive())
            throw usage_error("atoms must be positive");
    for (std::size_t i = 0; i + 1 < atoms.size(); ++i)
        for (std::size_t j = i + 1; j < atoms.size(); ++j)
            if (atoms[i] == atoms[j])
                throw usage_error("atoms must be distinct");
    if (x.is_zero())
        return EnumerationResult{{Factorization{}}, false};
    if (atoms.empty())
        return EnumerationResult{{}, false};

    GenericSearch search(atoms, x, budget.max_length);
    cpp_int by_value = floor_div(x / atoms[0]);
    bool pre_truncated = false;
    cpp_int amax = by_value;
    if (amax > budget.max_length) {
        pre_truncated = !search.complete;
        amax = budget.max_length;
    }
    std::size_t branches = static_cast<std::size_t>(amax) + 1;
    std::vector<BranchSlot> slots(branches);
    runner(branches, [&](std::size_t idx) {
        cpp_int alpha = amax - static_cast<std::int64_t>(idx); // descending
        std::vector<std::pair<Factorization::exponent_type, cpp_int>> stack;
        if (alpha != 0)
            stack.emplace_back(0, alpha);
        search.rec(1, x - Rational(alpha) * atoms[0], budget.max_length - alpha, stack,
                   slots[idx]);
    });
    return merge_slots(std::move(slots), pre_truncated);
}

// ---- semiring enumeration, r > 1 ----
//
// Walks exponents upward. With the remainder expressed in units of the
// current atom, the coefficient is forced modulo a, so the branching factor
// at each node is the number of admissible representatives, and a nonzero
// remainder below one unit kills the branch (the smallest remaining atom is
// one unit).

struct Gt1Search {
    cpp_int a, b;
    cpp_int inv_b; // inverse of b modulo a
    unsigned max_exponent;
    Rational ratio_down; // b/a

    explicit Gt1Search(const CyclicSemiring& S, unsigned max_exponent_)
        : a(S.a()), b(S.b()), inv_b(mod_inverse(S.b() % S.a(), S.a())),
          max_exponent(max_exponent_), ratio_down(S.b(), S.a()) {}

    // Forced residue of the coefficient at the current exponent, or nullopt
    // when the remainder is not representable at all.
    std::optional<cpp_int> residue(const Rational& u) const {
        auto m = denominator_depth(u.den(), b);
        if (!m)
            return std::nullopt;
        cpp_int scaled = u.num() * (boost::multiprecision::pow(b, *m) / u.den());
        cpp_int c = scaled % a;
        if (*m > 0) {
            cpp_int shift = powm(inv_b, cpp_int(*m), a);
            c = c * shift % a;
        }
        return c;
    }

    void rec(unsigned i, const Rational& u, const cpp_int& lrem,
             std::vector<std::pair<Factorization::exponent_type, cpp_int>>& stack,
             BranchSlot& slot) const {
        if (u.is_zero()) {
            Factorization z;
            for (const auto& [e, c] : stack)
                z.add(e, c);
            slot.out.push_back(std::move(z));
            return;
        }
        if (u < Rational(1))
            return;
        if (i > max_exponent) {
            slot.truncated = true; // value remains but the window is exhausted
            return;
        }
        auto c = residue(u);
        if (!c)
            return;
        cpp_int by_value = floor_div(u);
        if (by_value < *c)
            return;
        cpp_int aligned_value = *c + ((by_value - *c) / a) * a;
        cpp_int amax = aligned_value;
        if (amax > lrem) {
            slot.truncated = true;
            if (lrem < *c)
                return;
            amax = *c + ((lrem - *c) / a) * a;
        }
        for (cpp_int alpha = amax;; alpha -= a) {
            if (alpha != 0)
                stack.emplace_back(i, alpha);
            rec(i + 1, (u - Rational(alpha)) * ratio_down, lrem - alpha, stack, slot);
            if (alpha != 0)
                stack.pop_back();
            if (alpha == *c)
                break;
        }
    }
};

template <typename Runner>
EnumerationResult enumerate_gt1(const CyclicSemiring& S, const Rational& x,
                                const OracleBudget& budget, Runner&& runner) {
    if (x.is_zero())
        return EnumerationResult{{Factorization{}}, false};
    Gt1Search search(S, budget.max_exponent);
    auto c = search.residue(x);
    if (!c)
        return EnumerationResult{{}, false};
    if (x < Rational(1))
        return EnumerationResult{{}, false};
    cpp_int by_value = floor_div(x);
    if (by_value < *c)
        return EnumerationResult{{}, false};
    cpp_int aligned_value = *c + ((by_value - *c) / search.a) * search.a;
    bool pre_truncated = false;
    cpp_int amax = aligned_value;
    if (amax > budget.max_length) {
        pre_truncated = true;
        if (budget.max_length < *c)
            return EnumerationResult{{}, true};
        amax = *c + ((budget.max_length - *c) / search.a) * search.a;
    }
    std::size_t branches = static_cast<std::size_t>((amax - *c) / search.a) + 1;
    std::vector<BranchSlot> slots(branches);
    runner(branches, [&](std::size_t idx) {
        cpp_int alpha = amax - cpp_int(idx) * search.a;
        std::vector<std::pair<Factorization::exponent_type, cpp_int>> stack;
        if (alpha != 0)
            stack.emplace_back(0, alpha);
        search.rec(1, (x - Rational(alpha)) * search.ratio_down,
                   budget.max_length - alpha, stack, slots[idx]);
    });
    return merge_slots(std::move(slots), pre_truncated);
}

// ---- semiring enumeration, r < 1 ----
//
// Walks exponents downward from the window top. At the current exponent j
// the coefficient is forced modulo b by the denominator of the remainder,
// and a local minimum-length bound (top-down digit extraction, kept separate
// from the library's normal-form routine on purpose) prunes branches whose
// every completion would blow the length budget.

struct Lt1Search {
    cpp_int a, b;
    cpp_int inv_a; // inverse of a modulo b
    Rational r;

    explicit Lt1Search(const CyclicSemiring& S)
        : a(S.a()), b(S.b()), inv_a(mod_inverse(S.a() % S.b(), S.b())), r(S.r()) {}

    std::optional<cpp_int> residue(const Rational& v, unsigned j) const {
        auto m = denominator_depth(v.den(), b);
        if (!m || *m > j)
            return std::nullopt;
        cpp_int scaled = v.num() * (boost::multiprecision::pow(b, j) / v.den());
        cpp_int shift = powm(inv_a, cpp_int(j), b);
        return scaled % b * shift % b;
    }

    // Length of the unique shortest representation of v, or nullopt when v is
    // not representable. Used only as a search bound.
    std::optional<cpp_int> min_length(const Rational& v,
                                      std::map<Rational, cpp_int>& memo) const {
        if (v.is_zero())
            return cpp_int(0);
        if (v.is_integer())
            return v.num();
        auto it = memo.find(v);
        if (it != memo.end())
            return it->second >= 0 ? std::optional<cpp_int>(it->second) : std::nullopt;
        auto m = denominator_depth(v.den(), b);
        std::optional<cpp_int> result;
        if (m) {
            cpp_int scaled = v.num() * (boost::multiprecision::pow(b, *m) / v.den());
            cpp_int shift = powm(inv_a, cpp_int(*m), b);
            cpp_int alpha = scaled % b * shift % b;
            if (alpha != 0) {
                auto rest = try_sub(v, Rational(alpha) * pow(r, *m));
                if (rest) {
                    auto tail = min_length(*rest, memo);
                    if (tail)
                        result = alpha + *tail;
                }
            }
        }
        memo[v] = result ? *result : cpp_int(-1);
        return result;
    }

    void rec(int j, const Rational& v, const cpp_int& lrem,
             std::vector<std::pair<Factorization::exponent_type, cpp_int>>& stack,
             BranchSlot& slot, std::map<Rational, cpp_int>& memo) const {
        if (v.is_zero()) {
            Factorization z;
            for (const auto& [e, c] : stack)
                z.add(e, c);
            slot.out.push_back(std::move(z));
            return;
        }
        if (j < 0)
            return;
        auto shortest = min_length(v, memo);
        if (!shortest)
            return;
        if (*shortest > lrem) {
            slot.truncated = true; // representable, but only beyond the cap
            return;
        }
        if (j == 0) {
            // Only the atom 1 remains.
            if (!v.is_integer())
                return;
            if (v.num() > lrem) {
                slot.truncated = true;
                return;
            }
            Factorization z;
            for (const auto& [e, c] : stack)
                z.add(e, c);
            z.add(0, v.num());
            slot.out.push_back(std::move(z));
            return;
        }
        auto c = residue(v, static_cast<unsigned>(j));
        if (!c)
            return;
        Rational atom = pow(r, static_cast<unsigned>(j));
        cpp_int by_value = floor_div(v / atom);
        cpp_int amax;
        if (by_value < *c) {
            amax = -1;
        } else {
            amax = *c + ((by_value - *c) / b) * b;
        }
        if (amax > lrem) {
            slot.truncated = true;
            amax = lrem < *c ? cpp_int(-1) : *c + ((lrem - *c) / b) * b;
        }
        if (amax < 0)
            return;
        for (cpp_int alpha = amax;; alpha -= b) {
            if (alpha != 0)
                stack.emplace_back(static_cast<Factorization::exponent_type>(j), alpha);
            rec(j - 1, v - Rational(alpha) * atom, lrem - alpha, stack, slot, memo);
            if (alpha != 0)
                stack.pop_back();
            if (alpha == *c)
                break;
        }
    }
};

template <typename Runner>
EnumerationResult enumerate_lt1(const CyclicSemiring& S, const Rational& x,
                                const OracleBudget& budget, Runner&& runner) {
    // The atom window is an admitted truncation of an infinite atom set, so
    // every result carries truncated semantics.
    if (x.is_zero())
        return EnumerationResult{{Factorization{}}, true};
    Lt1Search search(S);
    int top = static_cast<int>(budget.max_exponent);
    Rational atom = pow(S.r(), budget.max_exponent);
    cpp_int by_value = floor_div(x / atom);
    auto c = search.residue(x, budget.max_exponent);
    if (!c)
        return EnumerationResult{{}, true};
    cpp_int amax;
    if (by_value < *c)
        amax = -1;
    else
        amax = *c + ((by_value - *c) / S.b()) * S.b();
    if (amax > budget.max_length)
        amax = budget.max_length < *c ? cpp_int(-1)
                                      : *c + ((budget.max_length - *c) / S.b()) * S.b();
    if (amax < 0)
        return EnumerationResult{{}, true};
    std::size_t branches = static_cast<std::size_t>((amax - *c) / S.b()) + 1;
    std::vector<BranchSlot> slots(branches);
    runner(branches, [&](std::size_t idx) {
        cpp_int alpha = amax - cpp_int(idx) * S.b();
        std::vector<std::pair<Factorization::exponent_type, cpp_int>> stack;
        std::map<Rational, cpp_int> memo;
        if (alpha != 0)
            stack.emplace_back(static_cast<Factorization::exponent_type>(top), alpha);
        search.rec(top - 1, x - Rational(alpha) * atom, budget.max_length - alpha, stack,
                   slots[idx], memo);
    });
    EnumerationResult result = merge_slots(std::move(slots), true);
    std::sort(result.factorizations.begin(), result.factorizations.end(), canonical_less);
    return result;
}

EnumerationResult enumerate_integer_semiring(const CyclicSemiring& S, const Rational& x,
                                             const OracleBudget& budget) {
    (void)S;
    if (x.is_zero())
        return EnumerationResult{{Factorization{}}, false};
    if (!x.is_integer())
        return EnumerationResult{{}, false};
    if (x.num() > budget.max_length)
        return EnumerationResult{{}, true};
    Factorization z;
    z.add(0, x.num());
    return EnumerationResult{{z}, false};
}

template <typename Runner>
EnumerationResult enumerate_semiring_impl(const CyclicSemiring& S, const Rational& x,
                                          const OracleBudget& budget, Runner&& runner) {
    if (!S.atomic())
        throw not_atomic("S_" + S.r().str() + " is antimatter");
    if (S.integer())
        return enumerate_integer_semiring(S, x, budget);
    if (S.greater_than_one())
        return enumerate_gt1(S, x, budget, runner);
    return enumerate_lt1(S, x, budget, runner);
}

} // namespace

EnumerationResult enumerate_factorizations(const std::vector<Rational>& atoms,
                                           const Rational& x, const OracleBudget& budget) {
    return enumerate_generic(atoms, x, budget,
                             [](std::size_t n, auto&& fn) { run_branches(n, fn); });
}

EnumerationResult enumerate_factorizations_serial(const std::vector<Rational>& atoms,
                                                  const Rational& x,
                                                  const OracleBudget& budget) {
    return enumerate_generic(atoms, x, budget,
                             [](std::size_t n, auto&& fn) { run_branches_serial(n, fn); });
}

EnumerationResult enumerate_for_semiring(const CyclicSemiring& S, const Rational& x,
                                         const OracleBudget& budget) {
    return enumerate_semiring_impl(S, x, budget,
                                   [](std::size_t n, auto&& fn) { run_branches(n, fn); });
}

EnumerationResult enumerate_for_semiring_serial(const CyclicSemiring& S, const Rational& x,
                                                const OracleBudget& budget) {
    return enumerate_semiring_impl(
        S, x, budget, [](std::size_t n, auto&& fn) { run_branches_serial(n, fn); });
}

OracleBudget complete_budget_for(const CyclicSemiring& S, const Rational& x,
                                 const OracleBudget& base) {
    if (!S.atomic())
        throw not_atomic("S_" + S.r().str() + " is antimatter");
    if (!S.integer() && !S.greater_than_one())
        throw unsupported("no complete enumeration budget exists for r < 1");
    OracleBudget budget = base;
    budget.max_length = std::max(budget.max_length, floor_div(x));
    unsigned e = 0;
    if (S.greater_than_one()) {
        Rational p(1);
        while (p * S.r() <= x) {
            p *= S.r();
            ++e;
        }
    }
    budget.max_exponent = std::max(budget.max_exponent, e);
    return budget;
}

OracleLengthSet oracle_length_set(const std::vector<Rational>& atoms, const Rational& x,
                                  const OracleBudget& budget) {
    auto enumeration = enumerate_factorizations(atoms, x, budget);
    OracleLengthSet out;
    out.truncated = enumeration.truncated;
    for (const auto& z : enumeration.factorizations)
        out.lengths.insert(z.length());
    return out;
}

OracleLengthSet oracle_length_set_for_semiring(const CyclicSemiring& S, const Rational& x,
                                               const OracleBudget& budget) {
    auto enumeration = enumerate_for_semiring(S, x, budget);
    OracleLengthSet out;
    out.truncated = enumeration.truncated;
    for (const auto& z : enumeration.factorizations)
        out.lengths.insert(z.length());
    return out;
}

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    std::uint32_t components;

    explicit UnionFind(std::uint32_t n) : parent(n), components(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::uint32_t find(std::uint32_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    // No path compression: safe for concurrent readers between merges.
    std::uint32_t find_const(std::uint32_t v) const {
        while (parent[v] != v)
            v = parent[v];
        return v;
    }
    bool merge(std::uint32_t u, std::uint32_t v) {
        u = find(u);
        v = find(v);
        if (u == v)
            return false;
        if (u > v)
            std::swap(u, v);
        parent[v] = u;
        --components;
        return true;
    }
};

// Dense nonnegative coefficient rows for fast pairwise distances.
struct DenseRows {
    std::size_t width = 0;
    std::vector<std::int64_t> data;
    std::vector<std::int64_t> lengths;

    explicit DenseRows(const std::vector<Factorization>& zs) {
        Factorization::exponent_type top = 0;
        for (const auto& z : zs)
            if (!z.empty())
                top = std::max(top, z.top_exponent());
        width = top + 1;
        data.assign(zs.size() * width, 0);
        lengths.reserve(zs.size());
        const cpp_int limit = std::numeric_limits<std::int64_t>::max();
        for (std::size_t i = 0; i < zs.size(); ++i) {
            std::int64_t len = 0;
            for (const auto& [e, c] : zs[i].terms()) {
                if (c > limit)
                    throw error("factorization coefficient too large for catenary kernel");
                data[i * width + e] = static_cast<std::int64_t>(c);
                len += static_cast<std::int64_t>(c);
            }
            lengths.push_back(len);
        }
    }

    std::int64_t dist(std::size_t i, std::size_t j) const {
        const std::int64_t* zi = data.data() + i * width;
        const std::int64_t* zj = data.data() + j * width;
        std::int64_t shared = 0;
        for (std::size_t k = 0; k < width; ++k)
            shared += std::min(zi[k], zj[k]);
        return std::max(lengths[i] - shared, lengths[j] - shared);
    }
};

// Threshold sweep with incremental component merging. The distance between
// two factorizations is at least the difference of their lengths, so at
// threshold t only pairs within a length window of t can connect; scanning
// in length order turns the quadratic pair scan into a banded one. Each
// pass prefilters candidate edges in parallel (reads only), then merges
// serially, so the component structure per threshold is schedule-independent.
cpp_int catenary_from(const std::vector<Factorization>& zs, bool parallel) {
    const std::size_t n = zs.size();
    if (n <= 1)
        return 0;
    DenseRows rows(zs);

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return rows.lengths[a] < rows.lengths[b];
    });

    std::int64_t t_cap = 0;
    for (auto len : rows.lengths)
        t_cap = std::max(t_cap, len); // d(z, z') <= max(|z|, |z'|)

    UnionFind uf(static_cast<std::uint32_t>(n));
    constexpr std::size_t kBlock = 2048;
    for (std::int64_t t = 1; t <= t_cap; ++t) {
        for (std::size_t block_start = 0; block_start < n; block_start += kBlock) {
            std::size_t block_end = std::min(n, block_start + kBlock);
            std::vector<std::vector<std::uint32_t>> hits(block_end - block_start);
            auto scan_position = [&](std::size_t slot) {
                std::size_t p = block_start + slot;
                std::uint32_t i = order[p];
                std::uint32_t root_i = uf.find_const(i);
                for (std::size_t q = p + 1; q < n; ++q) {
                    std::uint32_t j = order[q];
                    if (rows.lengths[j] - rows.lengths[i] > t)
                        break;
                    if (uf.find_const(j) == root_i)
                        continue;
                    if (rows.dist(i, j) <= t)
                        hits[slot].push_back(j);
                }
            };
            if (parallel)
                run_branches(block_end - block_start, scan_position);
            else
                run_branches_serial(block_end - block_start, scan_position);
            for (std::size_t slot = 0; slot < hits.size(); ++slot)
                for (std::uint32_t j : hits[slot])
                    uf.merge(order[block_start + slot], j);
        }
        if (uf.components == 1)
            return t;
    }
    throw error("catenary sweep exceeded the distance cap");
}

// Straightforward reference: full pairwise scan per threshold, no ordering.
cpp_int catenary_reference(const std::vector<Factorization>& zs) {
    const std::size_t n = zs.size();
    if (n <= 1)
        return 0;
    DenseRows rows(zs);
    std::int64_t t_cap = 0;
    for (auto len : rows.lengths)
        t_cap = std::max(t_cap, len);
    UnionFind uf(static_cast<std::uint32_t>(n));
    for (std::int64_t t = 1; t <= t_cap; ++t) {
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (uf.find(static_cast<std::uint32_t>(i)) !=
                        uf.find(static_cast<std::uint32_t>(j)) &&
                    rows.dist(i, j) <= t)
                    uf.merge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        if (uf.components == 1)
            return t;
    }
    throw error("catenary sweep exceeded the distance cap");
}

} // namespace

cpp_int oracle_catenary(const EnumerationResult& enumeration) {
    if (enumeration.truncated)
        throw truncated_enumeration("catenary degree requires a complete enumeration");
    return catenary_from(enumeration.factorizations, true);
}

cpp_int oracle_catenary(const std::vector<Rational>& atoms, const Rational& x,
                        const OracleBudget& budget) {
    return oracle_catenary(enumerate_factorizations(atoms, x, budget));
}

cpp_int oracle_catenary_serial(const EnumerationResult& enumeration) {
    if (enumeration.truncated)
        throw truncated_enumeration("catenary degree requires a complete enumeration");
    return catenary_reference(enumeration.factorizations);
}

namespace {

struct OmegaSearch {
    const std::vector<Rational>& atoms;
    const Rational& x;
    const DivisibilityTest& divisibility;
    cpp_int max_bundle;
    std::map<Rational, bool> memo;
    std::vector<Factorization> minimal_found;
    cpp_int best = 0;

    bool divisible(const Rational& y) {
        auto it = memo.find(y);
        if (it != memo.end())
            return it->second;
        bool result = divisibility(x, y);
        memo.emplace(y, result);
        return result;
    }

    bool contains_known_minimal(const std::vector<cpp_int>& coeffs) const {
        for (const auto& w : minimal_found) {
            bool contained = true;
            for (const auto& [e, c] : w.terms()) {
                if (coeffs[e] < c) {
                    contained = false;
                    break;
                }
            }
            if (contained)
                return true;
        }
        return false;
    }

    Rational eval_coeffs(const std::vector<cpp_int>& coeffs) const {
        Rational total(0);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0)
                total += Rational(coeffs[i]) * atoms[i];
        return total;
    }

    // True when no proper sub-bundle is divisible.
    bool is_minimal(const std::vector<cpp_int>& coeffs) {
        std::vector<cpp_int> sub(coeffs.size(), 0);
        return minimal_scan(coeffs, sub, 0, true);
    }

    bool minimal_scan(const std::vector<cpp_int>& coeffs, std::vector<cpp_int>& sub,
                      std::size_t i, bool all_equal_so_far) {
        if (i == coeffs.size()) {
            if (all_equal_so_far)
                return true; // the bundle itself, not a proper sub-bundle
            bool empty = true;
            for (const auto& c : sub)
                if (c != 0) {
                    empty = false;
                    break;
                }
            if (empty)
                return true; // x never divides 0
            return !divisible(eval_coeffs(sub));
        }
        for (cpp_int c = coeffs[i]; c >= 0; --c) {
            sub[i] = c;
            if (!minimal_scan(coeffs, sub, i + 1, all_equal_so_far && c == coeffs[i]))
                return false;
        }
        sub[i] = 0;
        return true;
    }

    void rec(std::size_t i, std::vector<cpp_int>& coeffs, const cpp_int& size,
             const Rational& value) {
        if (i == atoms.size()) {
            if (size == 0)
                return;
            if (value < x)
                return;
            if (!divisible(value))
                return;
            bool worth_checking = size > best || size <= 2;
            if (!worth_checking)
                return;
            if (is_minimal(coeffs)) {
                Factorization w;
                for (std::size_t k = 0; k < coeffs.size(); ++k)
                    w.add(static_cast<Factorization::exponent_type>(k), coeffs[k]);
                minimal_found.push_back(std::move(w));
                if (size > best)
                    best = size;
            }
            return;
        }
        for (cpp_int c = 0; c <= max_bundle - size; ++c) {
            coeffs[i] = c;
            if (c != 0 && contains_known_minimal(coeffs)) {
                // every extension strictly contains a divisible sub-bundle
                coeffs[i] = 0;
                break;
            }
            rec(i + 1, coeffs, size + c, value + Rational(c) * atoms[i]);
        }
        coeffs[i] = 0;
    }
};

} // namespace

OracleOmega oracle_omega(const std::vector<Rational>& atoms, const Rational& x,
                         const OracleBudget& budget, const DivisibilityTest& divisibility) {
    if (x.is_zero())
        return OracleOmega{0, true};
    OmegaSearch search{atoms, x, divisibility, budget.max_bundle, {}, {}, 0};

    // Single-atom thresholds: least beta with x | beta * atom_i.
    std::vector<cpp_int> beta(atoms.size(), 0);
    bool thresholds_complete = true;
    cpp_int box_size_sum = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        bool found = false;
        for (cpp_int c = 1; c <= budget.max_bundle; ++c) {
            if (Rational(c) * atoms[i] >= x && search.divisible(Rational(c) * atoms[i])) {
                beta[i] = c;
                found = true;
                break;
            }
        }
        if (!found) {
            thresholds_complete = false;
            break;
        }
        box_size_sum += beta[i] - 1;
    }

    bool certified = false;
    cpp_int certified_value = 0;
    if (thresholds_complete && box_size_sum <= budget.max_bundle) {
        // Exhaust the finite box {z : z_i < beta_i}. If it holds no divisible
        // bundle, every divisible bundle contains some beta_i * atom_i, so the
        // minimal ones are exactly those single-atom bundles.
        bool clean = true;
        bool exhausted = true;
        std::size_t nodes = 0;
        constexpr std::size_t kBoxNodeCap = 4000000;
        std::function<void(std::size_t, const Rational&, bool)> walk =
            [&](std::size_t i, const Rational& value, bool any) {
                if (!clean || !exhausted)
                    return;
                if (++nodes > kBoxNodeCap) {
                    exhausted = false;
                    return;
                }
                if (i == atoms.size()) {
                    if (any && value >= x && search.divisible(value))
                        clean = false;
                    return;
                }
                for (cpp_int c = 0; c < beta[i] && clean && exhausted; ++c)
                    walk(i + 1, value + Rational(c) * atoms[i], any || c != 0);
            };
        walk(0, Rational(0), false);
        if (clean && exhausted) {
            certified = true;
            for (const auto& bi : beta)
                certified_value = std::max(certified_value, bi);
        }
    }

    if (certified)
        return OracleOmega{certified_value, true};

    std::vector<cpp_int> coeffs(atoms.size(), 0);
    search.rec(0, coeffs, 0, Rational(0));
    return OracleOmega{search.best, false};
}

std::vector<Rational> semiring_atoms(const CyclicSemiring& S, unsigned max_exponent) {
    if (!S.atomic())
        throw not_atomic("S_" + S.r().str() + " is antimatter");
    if (S.integer())
        return {Rational(1)};
    std::vector<Rational> atoms;
    atoms.reserve(max_exponent + 1);
    for (unsigned e = 0; e <= max_exponent; ++e)
        atoms.push_back(S.atom(e));
    return atoms;
}

} // namespace geomfactor
