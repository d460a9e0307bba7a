/**
 * @file serialization.hpp
 * @brief Wire formats: exact strings and JSON objects, no floating point.
 */
#ifndef GEOMFACTOR_SERIALIZATION_HPP
#define GEOMFACTOR_SERIALIZATION_HPP

#include <json.hpp>

#include <string>

#include "geomfactor/factorization.hpp"
#include "geomfactor/invariants.hpp"
#include "geomfactor/oracle.hpp"

namespace geomfactor {

// {"3":"2","4":"1"}: decimal exponent keys, decimal coefficient values.
nlohmann::json factorization_to_json(const Factorization& z);
Factorization factorization_from_json(const nlohmann::json& j);

// {"start": s, "difference": d, "count": c | "inf"}
nlohmann::json length_set_to_json(const LengthSet& ls);

// "p/q" or "inf".
std::string elasticity_to_string(const ElasticityValue& v);
std::string extended_to_string(const std::optional<cpp_int>& v);

// "max_exponent,max_length,max_bundle"
OracleBudget parse_budget(const std::string& text);
nlohmann::json budget_to_json(const OracleBudget& budget);

// JSON integer when it fits 64 bits, decimal string otherwise.
nlohmann::json json_int(const cpp_int& v);

} // namespace geomfactor

#endif // GEOMFACTOR_SERIALIZATION_HPP
