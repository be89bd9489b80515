#pragma once

#include <string>
#include <vector>

namespace tmlab::cli {

struct Series {
    std::string name;
    std::vector<double> x, y;
};

// SVG 1.1 line chart. Output depends only on the inputs (fixed number formatting, no timestamps).
std::string line_chart(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                       const std::vector<Series>& series);
std::string bar_chart(const std::string& title, const std::vector<std::pair<std::string, double>>& bars);

} // namespace tmlab::cli
