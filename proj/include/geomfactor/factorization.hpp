/**
 * @file factorization.hpp
 * @brief Formal sums of atoms and the basic metrics on them.
 *
 * A Factorization is a finitely supported map exponent -> coefficient with
 * all coefficients positive; the empty map is the factorization of 0. For a
 * cyclic semiring the key is the exponent of the atom r^i; for an explicit
 * atom list it is the index into that list.
 */
#ifndef GEOMFACTOR_FACTORIZATION_HPP
#define GEOMFACTOR_FACTORIZATION_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>

#include "geomfactor/rational.hpp"

namespace geomfactor {

class Factorization {
public:
    using exponent_type = std::uint32_t;
    using terms_type = std::map<exponent_type, cpp_int>;

    Factorization() = default;
    Factorization(std::initializer_list<std::pair<exponent_type, cpp_int>> init) {
        for (const auto& [e, c] : init)
            add(e, c);
    }

    // Merges into an existing term; dropping to zero removes the term.
    void add(exponent_type exp, const cpp_int& count);

    const cpp_int& coefficient(exponent_type exp) const;
    const terms_type& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    exponent_type top_exponent() const; // requires non-empty

    // |z|: the sum of all coefficients.
    cpp_int length() const;

    bool operator==(const Factorization& o) const { return terms_ == o.terms_; }

private:
    terms_type terms_;
};

// Coefficient-wise minimum.
Factorization gcd(const Factorization& a, const Factorization& b);

// max(|a| - |gcd|, |b| - |gcd|); a metric on factorizations.
cpp_int distance(const Factorization& a, const Factorization& b);

// Canonical order: scan exponents upward, larger coefficient first. This is
// the order a depth-first search over exponents ascending with coefficients
// descending emits. Distinct factorizations never tie.
bool canonical_less(const Factorization& a, const Factorization& b);

/**
 * Symbolic arithmetic progression of factorization lengths:
 * {start + j*difference | 0 <= j < count}, count nullopt meaning infinite.
 * difference == 0 forces a single term.
 */
struct LengthSet {
    cpp_int start;
    cpp_int difference;
    std::optional<cpp_int> count; // nullopt = infinite

    bool is_infinite() const { return !count.has_value(); }
    bool singleton() const { return count && *count == 1; }
    cpp_int max() const; // throws infinite_object when infinite
    bool contains(const cpp_int& len) const;
    // All values <= limit, ascending.
    std::vector<cpp_int> values_up_to(const cpp_int& limit) const;

    bool operator==(const LengthSet& o) const = default;
};

} // namespace geomfactor

#endif // GEOMFACTOR_FACTORIZATION_HPP
