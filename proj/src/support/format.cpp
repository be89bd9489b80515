#include "tmlab/support/format.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "tmlab/support/error.hpp"

namespace tmlab {

std::string num_str(double x, int digits) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

double parse_num(const std::string& s) {
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        domain_error("bad-number", "cannot parse '" + s + "'");
    }
    if (used != s.size()) domain_error("bad-number", "trailing characters in '" + s + "'");
    return v;
}

double num_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_num(j.get<std::string>());
    if (j.is_number()) return j.get<double>();
    domain_error("file-format", "expected a number");
}

} // namespace tmlab
