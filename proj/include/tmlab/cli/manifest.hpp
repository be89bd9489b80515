#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

namespace tmlab::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Everything needed to rerun a command. Timing is the only field allowed to differ between reruns.
struct RunManifest {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::string version = kToolVersion;
    std::map<std::string, std::string> input_digests;  // path -> sha256 hex
    std::string precision;                             // "exact", "double", "mpfr100", ...
    unsigned workers = 0;
    bool timing = true;
    std::string started;                               // UTC, ISO 8601
    double elapsed_s = 0;

    void add_input(const std::string& path);
    nlohmann::json to_json() const;
};

std::string sha256_file(const std::string& path);
std::string utc_now();

} // namespace tmlab::cli
