#pragma once

#include <CLI11.hpp>

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "tmlab/cli/manifest.hpp"

namespace tmlab::cli {

struct Context {
    RunManifest manifest;
    std::uint64_t seed = 1;
    unsigned workers = 0;
};

using Action = std::function<nlohmann::json(Context&)>;

// The parsed subcommand: its name, default precision label and action.
struct Dispatch {
    std::string command;
    std::string precision;
    CLI::App* app = nullptr;
    Action action;

    void bind(CLI::App* sub, std::string name, std::string prec, Action a) {
        sub->callback([this, sub, name = std::move(name), prec = std::move(prec), a = std::move(a)] {
            command = name;
            precision = prec;
            app = sub;
            action = a;
        });
    }
};

void register_core_commands(CLI::App& root, Dispatch& d);
void register_algebraic_commands(CLI::App& root, Dispatch& d);
void register_report_command(CLI::App& root, Dispatch& d);

// Reads a JSON file, unwrapping {"manifest", "result"} envelopes; records its digest.
nlohmann::json load_json(Context& ctx, const std::string& path);
void write_text(const std::string& path, const std::string& text);
std::complex<double> parse_complex(const std::string& s);

} // namespace tmlab::cli
