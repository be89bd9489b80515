#include "tmlab/covering/diameter.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"

namespace tmlab::covering {

namespace {

bool inside(const Disk& d, Complex p) { return std::abs(p - d.center) <= d.radius * (1 + 1e-12) + 1e-14; }

Disk from2(Complex a, Complex b) { return {0.5 * (a + b), 0.5 * std::abs(a - b)}; }

Disk from3(Complex a, Complex b, Complex c) {
    Complex ab = b - a, ac = c - a;
    double d = 2 * (ab.real() * ac.imag() - ab.imag() * ac.real());
    if (std::abs(d) < 1e-300) {
        // collinear: the farthest pair
        Disk best = from2(a, b);
        for (Disk t : {from2(a, c), from2(b, c)})
            if (t.radius > best.radius) best = t;
        return best;
    }
    double n1 = std::norm(ab), n2 = std::norm(ac);
    Complex u((ac.imag() * n1 - ab.imag() * n2) / d, (ab.real() * n2 - ac.real() * n1) / d);
    return {a + u, std::abs(u)};
}

} // namespace

Disk min_enclosing_disk(const std::vector<Complex>& points) {
    if (points.empty()) domain_error("empty-set", "min enclosing disk of no points");
    std::vector<Complex> p = points;
    // fixed shuffle keeps the expected linear time and the output deterministic
    std::mt19937_64 rng(0x5eed);
    std::shuffle(p.begin(), p.end(), rng);
    Disk d{p[0], 0};
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (inside(d, p[i])) continue;
        d = {p[i], 0};
        for (std::size_t j = 0; j < i; ++j) {
            if (inside(d, p[j])) continue;
            d = from2(p[i], p[j]);
            for (std::size_t k = 0; k < j; ++k)
                if (!inside(d, p[k])) d = from3(p[i], p[j], p[k]);
        }
    }
    return d;
}

nlohmann::json DiskCover::to_json() const {
    nlohmann::json j;
    j["method"] = method;
    j["total"] = num_json(total);
    auto arr = nlohmann::json::array();
    for (const auto& d : disks)
        arr.push_back({{"re", num_json(d.center.real())}, {"im", num_json(d.center.imag())}, {"radius", num_json(d.radius)}});
    j["disks"] = arr;
    j["assignment"] = assignment;
    j["precision_digits"] = kOutputDigits;
    return j;
}

namespace {

DiskCover singletons(const std::vector<Complex>& points, const std::string& method) {
    DiskCover c;
    c.method = method;
    for (std::size_t i = 0; i < points.size(); ++i) {
        c.disks.push_back({points[i], 0});
        c.assignment.push_back(static_cast<int>(i));
    }
    return c;
}

// Restricted-growth enumeration with branch and bound; cell radii memoized by bitmask.
class Partitioner {
public:
    Partitioner(const std::vector<Complex>& p, int n) : p_(p), n_(n), label_(p.size(), 0), best_label_(p.size(), 0) {}

    double radius(unsigned mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        std::vector<Complex> pts;
        for (std::size_t i = 0; i < p_.size(); ++i)
            if (mask >> i & 1u) pts.push_back(p_[i]);
        double r = min_enclosing_disk(pts).radius;
        memo_.emplace(mask, r);
        return r;
    }

    void run() {
        best_ = INFINITY;
        masks_.assign(n_, 0);
        label_[0] = 0;
        masks_[0] = 1u;
        search(1, 1, 0.0);
    }

    double best() const { return best_; }
    const std::vector<int>& labels() const { return best_label_; }

private:
    void search(std::size_t i, int blocks, double partial) {
        if (partial >= best_ * (1 - 1e-15) && best_ < INFINITY) return;
        if (i == p_.size()) {
            best_ = partial;
            best_label_ = label_;
            return;
        }
        // remaining points can open at most n - blocks new cells
        for (int b = 0; b <= std::min(blocks, n_ - 1); ++b) {
            unsigned old = b < blocks ? masks_[b] : 0u;
            unsigned now = old | (1u << i);
            double delta = radius(now) - (old ? radius(old) : 0.0);
            masks_[b] = now;
            label_[i] = b;
            search(i + 1, b == blocks ? blocks + 1 : blocks, partial + delta);
            masks_[b] = old;
        }
    }

    const std::vector<Complex>& p_;
    int n_;
    std::vector<int> label_, best_label_;
    std::vector<unsigned> masks_;
    std::unordered_map<unsigned, double> memo_;
    double best_ = INFINITY;
};

DiskCover cover_from_labels(const std::vector<Complex>& points, const std::vector<int>& labels, const std::string& m) {
    DiskCover c;
    c.method = m;
    int blocks = points.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    for (int b = 0; b < blocks; ++b) {
        std::vector<Complex> cell;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (labels[i] == b) cell.push_back(points[i]);
        c.disks.push_back(min_enclosing_disk(cell));
        c.total += c.disks.back().radius;
    }
    c.assignment = labels;
    return c;
}

} // namespace

DiskCover nth_diameter_exact(const std::vector<Complex>& points, int n) {
    if (n < 1) domain_error("bad-degree", "n must be at least 1");
    if (points.size() > kExactLimit) domain_error("instance-too-large", "exact n-th diameter limited to 14 points");
    if (points.size() <= static_cast<std::size_t>(n)) return singletons(points, "exact");
    Partitioner part(points, n);
    part.run();
    return cover_from_labels(points, part.labels(), "exact");
}

DiskCover nth_diameter_greedy(const std::vector<Complex>& points, int n) {
    if (n < 1) domain_error("bad-degree", "n must be at least 1");
    if (points.size() <= static_cast<std::size_t>(n)) return singletons(points, "greedy");
    std::vector<std::vector<int>> cells;
    std::vector<double> rad;
    for (std::size_t i = 0; i < points.size(); ++i) {
        cells.push_back({static_cast<int>(i)});
        rad.push_back(0);
    }
    auto merged_radius = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<Complex> pts;
        for (int i : a) pts.push_back(points[i]);
        for (int i : b) pts.push_back(points[i]);
        return min_enclosing_disk(pts).radius;
    };
    while (cells.size() > static_cast<std::size_t>(n)) {
        std::size_t ba = 0, bb = 1;
        double best = INFINITY, best_r = 0;
        for (std::size_t a = 0; a < cells.size(); ++a)
            for (std::size_t b = a + 1; b < cells.size(); ++b) {
                double r = merged_radius(cells[a], cells[b]);
                double inc = r - rad[a] - rad[b];
                if (inc < best - 1e-15 * std::max(1.0, std::abs(best))) {
                    best = inc;
                    best_r = r;
                    ba = a;
                    bb = b;
                }
            }
        cells[ba].insert(cells[ba].end(), cells[bb].begin(), cells[bb].end());
        rad[ba] = best_r;
        cells.erase(cells.begin() + bb);
        rad.erase(rad.begin() + bb);
    }
    std::vector<int> labels(points.size());
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (int i : cells[c]) labels[i] = static_cast<int>(c);
    return cover_from_labels(points, labels, "greedy");
}

} // namespace tmlab::covering
