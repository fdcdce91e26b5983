#pragma once

// Test-only oracles, deliberately independent of the code paths they check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jointgf/rational.hpp"
#include "jointgf/univariate_series.hpp"

#include <json.hpp>

namespace testsupport {

using jointgf::Rational;
using jointgf::UnivariateSeries;

// Schoolbook long division: peel off one quotient term at a time and
// subtract its multiple of the divisor from the running remainder.
inline UnivariateSeries schoolbook_div(const UnivariateSeries& a, const UnivariateSeries& b) {
    UnivariateSeries remainder = a;
    UnivariateSeries quotient(a.order());
    for (int k = 0; k <= a.order(); ++k) {
        const Rational qk = remainder.coeff(k) / b.coeff(0);
        quotient.set_coeff(k, qk);
        for (int j = 0; k + j <= a.order(); ++j)
            remainder.set_coeff(k + j, remainder.coeff(k + j) - qk * b.coeff(j));
    }
    return quotient;
}

// Counts noncrossing perfect matchings on the points lo..hi by explicit
// recursion over the partner of the leftmost point.
inline std::uint64_t count_noncrossing_perfect(int lo, int hi) {
    if (lo > hi)
        return 1;
    std::uint64_t total = 0;
    for (int j = lo + 1; j <= hi; j += 2)
        total += count_noncrossing_perfect(lo + 1, j - 1) * count_noncrossing_perfect(j + 1, hi);
    return total;
}

inline std::uint64_t matchings_with_arcs(int arcs) {
    return count_noncrossing_perfect(1, 2 * arcs);
}

inline UnivariateSeries random_series(std::mt19937& rng, int order, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 3);
    UnivariateSeries s(order);
    for (int k = 0; k <= order; ++k) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        s.set_coeff(k, c);
    }
    return s;
}

// Minimal structural validator for the schema subset used by the shipped
// schema files: type, enum, required, properties, items, anyOf.
inline bool matches_schema(const nlohmann::json& value, const nlohmann::json& schema,
                           std::string& error) {
    if (schema.contains("anyOf")) {
        for (const auto& option : schema["anyOf"]) {
            std::string ignored;
            if (matches_schema(value, option, ignored))
                return true;
        }
        error = "no anyOf alternative matched";
        return false;
    }
    if (schema.contains("type")) {
        const std::string type = schema["type"].get<std::string>();
        const bool ok = (type == "object" && value.is_object()) ||
                        (type == "array" && value.is_array()) ||
                        (type == "string" && value.is_string()) ||
                        (type == "integer" && value.is_number_integer()) ||
                        (type == "number" && value.is_number()) ||
                        (type == "boolean" && value.is_boolean());
        if (!ok) {
            error = "expected type " + type + ", got " + value.dump().substr(0, 60);
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& allowed : schema["enum"])
            if (allowed == value)
                found = true;
        if (!found) {
            error = "value not in enum: " + value.dump();
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    error = "missing required key: " + key.get<std::string>();
                    return false;
                }
        if (schema.contains("properties"))
            for (const auto& [key, subschema] : schema["properties"].items())
                if (value.contains(key) && !matches_schema(value[key], subschema, error)) {
                    error = key + ": " + error;
                    return false;
                }
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& element : value)
            if (!matches_schema(element, schema["items"], error)) {
                error = "array item: " + error;
                return false;
            }
    return true;
}

inline std::vector<long> low_coeffs(const UnivariateSeries& s, int count) {
    std::vector<long> out;
    for (int k = 0; k < count && k <= s.order(); ++k)
        out.push_back(static_cast<long>(s.coeff(k).get_num().get_si()));
    return out;
}

} // namespace testsupport
