#ifndef GEOMFACTOR_ERRORS_HPP
#define GEOMFACTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace geomfactor {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Usage-class errors (bad arguments, wrong regime). CLI exit code 2.
struct usage_error : error {
    using error::error;
};

struct zero_denominator : usage_error {
    zero_denominator() : usage_error("zero denominator") {}
};

struct negative_value : usage_error {
    explicit negative_value(const std::string& what) : usage_error(what) {}
};

struct parse_error : usage_error {
    explicit parse_error(const std::string& what) : usage_error(what) {}
};

// The requested witness or sample does not exist in this regime.
struct unsupported : usage_error {
    explicit unsupported(const std::string& what) : usage_error(what) {}
};

struct invalid_target : usage_error {
    explicit invalid_target(const std::string& what) : usage_error(what) {}
};

struct unique_factorization : usage_error {
    explicit unique_factorization(const std::string& what) : usage_error(what) {}
};

struct not_arithmetic : usage_error {
    explicit not_arithmetic(const std::string& what) : usage_error(what) {}
};

// x is not an element of the monoid. CLI exit code 3.
struct not_member : error {
    explicit not_member(const std::string& what) : error(what) {}
};

// Factorization operation on an antimatter semiring. CLI exit code 4.
struct not_atomic : error {
    explicit not_atomic(const std::string& what) : error(what) {}
};

// A finite answer was requested for an infinite object. CLI exit code 5.
struct infinite_object : error {
    explicit infinite_object(const std::string& what) : error(what) {}
};

// Oracle result depends on a truncated enumeration.
struct truncated_enumeration : error {
    explicit truncated_enumeration(const std::string& what) : error(what) {}
};

} // namespace geomfactor

#endif // GEOMFACTOR_ERRORS_HPP
