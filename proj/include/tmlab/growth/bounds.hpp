#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace tmlab::growth {

using BoundParams = std::map<std::string, double>;

struct BoundSpec {
    std::string key;
    std::string result;    // which statement the formula comes from
    std::string formula;   // plain-text form
    std::vector<std::string> required;
    std::vector<std::string> optional;
};

struct BoundValue {
    std::string key;
    double log_value = 0;  // -inf for an exact zero
    double value = 0;      // inf when exp(log_value) overflows
    bool overflow = false;

    nlohmann::json to_json() const;
};

// Closed set of string keys, each a log-space evaluator that names the violated domain condition.
class BoundRegistry {
public:
    using LogEval = std::function<double(const BoundParams&)>;

    void add(BoundSpec spec, LogEval eval);
    bool has(const std::string& key) const;
    const BoundSpec& spec(const std::string& key) const;
    std::vector<std::string> keys() const;
    BoundValue evaluate(const std::string& key, const BoundParams& params) const;
    // Merges another registry; duplicate keys are an error.
    void merge(const BoundRegistry& other);

private:
    std::vector<BoundSpec> specs_;
    std::map<std::string, LogEval> evals_;
};

const BoundRegistry& growth_bounds();

// Parameter access shared by registries: throws missing-parameter / parameter-domain.
double bound_param(const BoundParams& p, const std::string& key, const std::string& name);
// "log_lambda" or "lambda" when present, else log Lambda(delta0) with delta0 from "delta0" (default 1).
double bound_log_lambda(const BoundParams& p);
[[noreturn]] void bound_domain(const std::string& key, const std::string& what);

} // namespace tmlab::growth
