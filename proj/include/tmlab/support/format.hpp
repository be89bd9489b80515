#pragma once

#include <string>

#include <json.hpp>

namespace tmlab {

inline constexpr int kOutputDigits = 17;

// Decimal string with 17 significant digits; non-finite values spelled out.
std::string num_str(double x, int digits = kOutputDigits);
double parse_num(const std::string& s);

inline nlohmann::json num_json(double x) { return num_str(x); }
double num_from_json(const nlohmann::json& j);

} // namespace tmlab
