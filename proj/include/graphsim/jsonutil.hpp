#pragma once

#include <chrono>
#include <optional>
#include <string>

#include <json.hpp>

namespace graphsim {

using json = nlohmann::json;
// Insertion-ordered variant, used where field order is part of a format.
using ordered_json = nlohmann::ordered_json;

// Shortest round-trip decimal rendering ("5", "0.1", "1e+21"). Negative zero
// normalizes to "0".
std::string canonical_number(double value);

// Full-string decimal parse; nullopt if the string is not exactly one finite
// decimal number.
std::optional<double> parse_number(const std::string &text);

// Answer-string canonicalization: trim whitespace, booleans to lowercase
// true/false, numbers to canonical_number form, anything else verbatim.
std::string canonicalize_answer(const std::string &answer);

// UTC instant as ISO-8601 with millisecond precision, e.g.
// "2025-06-01T09:14:22.000Z".
std::string format_utc(std::chrono::system_clock::time_point tp);
std::string now_utc();

// Deep value equality with int/float numeric unification (nlohmann already
// compares 5 == 5.0 as equal); kept as a named helper so call sites read as
// intent.
bool canonical_equal(const json &a, const json &b);

// Re-keys an object tree into insertion order = sorted key order, so dumps of
// equal values are byte-identical.
ordered_json to_ordered(const json &value);

}  // namespace graphsim
