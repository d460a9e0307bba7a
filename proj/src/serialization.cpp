#include "geomfactor/serialization.hpp"

#include <limits>

#include "geomfactor/errors.hpp"

namespace geomfactor {

nlohmann::json factorization_to_json(const Factorization& z) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : z.terms())
        j[std::to_string(e)] = c.str();
    return j;
}

Factorization factorization_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw parse_error("factorization must be a JSON object");
    Factorization z;
    for (const auto& [key, value] : j.items()) {
        unsigned long exp = std::stoul(key);
        cpp_int coeff = value.is_string() ? cpp_int(value.get<std::string>())
                                          : cpp_int(value.get<long long>());
        if (coeff <= 0)
            throw parse_error("coefficients must be positive");
        z.add(static_cast<Factorization::exponent_type>(exp), coeff);
    }
    return z;
}

nlohmann::json json_int(const cpp_int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

nlohmann::json length_set_to_json(const LengthSet& ls) {
    nlohmann::json j;
    j["start"] = json_int(ls.start);
    j["difference"] = json_int(ls.difference);
    if (ls.count)
        j["count"] = json_int(*ls.count);
    else
        j["count"] = "inf";
    return j;
}

std::string elasticity_to_string(const ElasticityValue& v) {
    return v ? v->str() : "inf";
}

std::string extended_to_string(const std::optional<cpp_int>& v) {
    return v ? v->str() : "inf";
}

OracleBudget parse_budget(const std::string& text) {
    auto first = text.find(',');
    auto second = first == std::string::npos ? std::string::npos : text.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw parse_error("budget must be 'max_exponent,max_length,max_bundle'");
    OracleBudget budget;
    try {
        budget.max_exponent = static_cast<unsigned>(std::stoul(text.substr(0, first)));
        budget.max_length = cpp_int(text.substr(first + 1, second - first - 1));
        budget.max_bundle = cpp_int(text.substr(second + 1));
    } catch (const std::exception&) {
        throw parse_error("budget must be 'max_exponent,max_length,max_bundle'");
    }
    if (budget.max_length < 1 || budget.max_bundle < 1)
        throw parse_error("budget bounds must be at least 1");
    return budget;
}

nlohmann::json budget_to_json(const OracleBudget& budget) {
    nlohmann::json j;
    j["max_exponent"] = budget.max_exponent;
    j["max_length"] = json_int(budget.max_length);
    j["max_bundle"] = json_int(budget.max_bundle);
    return j;
}

} // namespace geomfactor
