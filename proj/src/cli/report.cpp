#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include "common.hpp"
#include "tmlab/cli/svg.hpp"
#include "tmlab/support/error.hpp"

namespace tmlab::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    return "";
}

// top-level scalar fields of a result, at most six
std::string summary(const json& r) {
    std::ostringstream o;
    int shown = 0;
    if (!r.is_object()) return "";
    for (const auto& [k, v] : r.items()) {
        std::string s = scalar(v);
        if (s.empty() || s.size() > 40) continue;
        o << (shown ? ", " : "") << k << " = " << s;
        if (++shown == 6) break;
    }
    return o.str();
}

} // namespace

void register_report_command(CLI::App& root, Dispatch& d) {
    struct O {
        std::string dir, md, svg;
    };
    auto o = std::make_shared<O>();
    auto* sub = root.add_subcommand("report", "aggregate a directory of run outputs into markdown and SVG");
    sub->add_option("--dir", o->dir, "directory of JSON outputs")->required()->check(CLI::ExistingDirectory);
    sub->add_option("--md", o->md, "markdown path (default DIR/summary.md)");
    sub->add_option("--svg", o->svg, "SVG path (default DIR/summary.svg)");
    d.bind(sub, "report", "exact", [o](Context& ctx) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(o->dir))
            if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        std::map<std::string, double> per_command;
        std::ostringstream md;
        md << "# Run summary\n\n| file | command | precision | summary |\n|---|---|---|---|\n";
        json rows = json::array();
        for (const auto& p : files) {
            std::ifstream in(p);
            json doc;
            try {
                doc = json::parse(in);
            } catch (const json::exception&) {
                continue;  // not ours
            }
            if (!doc.is_object() || !doc.contains("manifest") || !doc.contains("result")) continue;
            ctx.manifest.add_input(p.string());
            std::string cmd = doc["manifest"].value("command", "?");
            std::string prec = doc["manifest"].value("precision", "");
            std::string sum = summary(doc["result"]);
            per_command[cmd] += 1;
            md << "| " << p.filename().string() << " | " << cmd << " | " << prec << " | " << sum << " |\n";
            rows.push_back({{"file", p.filename().string()}, {"command", cmd}, {"precision", prec}, {"summary", sum}});
        }
        md << "\n" << rows.size() << " runs.\n";
        std::vector<std::pair<std::string, double>> bars(per_command.begin(), per_command.end());
        std::string md_path = o->md.empty() ? (fs::path(o->dir) / "summary.md").string() : o->md;
        std::string svg_path = o->svg.empty() ? (fs::path(o->dir) / "summary.svg").string() : o->svg;
        write_text(md_path, md.str());
        write_text(svg_path, bar_chart("runs per command", bars));
        return json{{"runs", rows}, {"markdown", md_path}, {"svg", svg_path}};
    });
}

} // namespace tmlab::cli
