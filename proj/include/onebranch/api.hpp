#pragma once
// String- and JSON-level entry points shared by the command-line tool and the Python module.

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "onebranch/field.hpp"

namespace onebranch {

/// Splits "t^5,t^8" at commas outside braces. Throws std::invalid_argument on empty input.
std::vector<std::string> split_generators(const std::string& text);

/// {semigroup, conductor, plane, valuationVector, type, pa_le_2, dominatedType, char}
nlohmann::json classify_order(const std::vector<std::string>& gens, FieldSpec field, std::size_t precision,
                              std::uint32_t ch);

/// S at index 0 followed by End(rad S), ... up to the normalization; one object per member.
nlohmann::json end_chain_json(const std::vector<std::string>& gens, FieldSpec field, std::size_t precision);

/// The order is a span document if given, otherwise generated by gens. Ideals not containing 1
/// are normalized first. Returns {isomorphic, witness?}.
nlohmann::json isomorphism_json(const std::optional<nlohmann::json>& order_span, const std::vector<std::string>& gens,
                                const nlohmann::json& a, const nlohmann::json& b, FieldSpec field,
                                std::size_t precision);

struct Enumeration {
  std::string text;  // JSON array or CSV
  std::vector<std::string> collisions;
};

/// Every ideal class of the order over F_p. format is "json" or "csv".
Enumeration enumerate_classes(const std::vector<std::string>& gens, FieldSpec field, std::size_t precision,
                              std::size_t jobs, const std::string& format);

}  // namespace onebranch
