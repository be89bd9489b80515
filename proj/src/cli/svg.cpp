#include "tmlab/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tmlab::cli {

namespace {

constexpr double W = 720, H = 440, L = 70, R = 150, T = 40, B = 50;
const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string f3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string esc(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '<') o += "&lt;";
        else if (c == '>') o += "&gt;";
        else if (c == '&') o += "&amp;";
        else o += c;
    }
    return o;
}

std::string header(const std::string& title) {
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W << "\" height=\"" << H << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" << esc(title)
      << "</text>\n";
    return o.str();
}

} // namespace

std::string line_chart(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                       const std::vector<Series>& series) {
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            x0 = std::min(x0, s.x[i]);
            x1 = std::max(x1, s.x[i]);
            y0 = std::min(y0, s.y[i]);
            y1 = std::max(y1, s.y[i]);
        }
    if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (x1 == x0) x1 = x0 + 1;
    if (y1 == y0) y1 = y0 + 1;
    auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };

    std::ostringstream o;
    o << header(title);
    o << "<g stroke=\"black\" fill=\"none\"><rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\""
      << H - T - B << "\"/></g>\n";
    o << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int t = 0; t <= 4; ++t) {
        double xv = x0 + (x1 - x0) * t / 4, yv = y0 + (y1 - y0) * t / 4;
        o << "<text x=\"" << f3(px(xv)) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\">" << tick(xv) << "</text>\n";
        o << "<text x=\"" << L - 6 << "\" y=\"" << f3(py(yv) + 4) << "\" text-anchor=\"end\">" << tick(yv) << "</text>\n";
    }
    o << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">" << esc(xlabel) << "</text>\n";
    o << "<text x=\"16\" y=\"" << (T + H - B) / 2 << "\" transform=\"rotate(-90 16 " << (T + H - B) / 2
      << ")\" text-anchor=\"middle\">" << esc(ylabel) << "</text>\n</g>\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* col = kColors[k % 6];
        o << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            o << (first ? "" : " ") << f3(px(s.x[i])) << "," << f3(py(s.y[i]));
            first = false;
        }
        o << "\"/>\n";
        double ly = T + 14 + 18 * double(k);
        o << "<line x1=\"" << W - R + 12 << "\" y1=\"" << ly << "\" x2=\"" << W - R + 32 << "\" y2=\"" << ly << "\" stroke=\"" << col
          << "\" stroke-width=\"2\"/>\n";
        o << "<text x=\"" << W - R + 38 << "\" y=\"" << ly + 4 << "\" font-family=\"sans-serif\" font-size=\"12\">" << esc(s.name)
          << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

std::string bar_chart(const std::string& title, const std::vector<std::pair<std::string, double>>& bars) {
    double top = 0;
    for (const auto& b : bars) top = std::max(top, b.second);
    if (top <= 0) top = 1;
    std::ostringstream o;
    o << header(title);
    double slot = bars.empty() ? 1 : (W - L - 40) / double(bars.size());
    for (std::size_t i = 0; i < bars.size(); ++i) {
        double h = bars[i].second / top * (H - T - B - 20), x = L + slot * double(i);
        o << "<rect x=\"" << f3(x + slot * 0.15) << "\" y=\"" << f3(H - B - h) << "\" width=\"" << f3(slot * 0.7) << "\" height=\""
          << f3(h) << "\" fill=\"" << kColors[i % 6] << "\"/>\n";
        o << "<text x=\"" << f3(x + slot / 2) << "\" y=\"" << H - B + 16
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << esc(bars[i].first) << "</text>\n";
        o << "<text x=\"" << f3(x + slot / 2) << "\" y=\"" << f3(H - B - h - 4)
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << tick(bars[i].second) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

} // namespace tmlab::cli
