#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tmlab/support/exact.hpp"

namespace tmlab::covering {

struct Disk {
    Complex center;
    double radius = 0;
};

Disk min_enclosing_disk(const std::vector<Complex>& points);

struct DiskCover {
    std::vector<Disk> disks;
    std::vector<int> assignment;  // disk index per point
    double total = 0;             // sum of radii
    std::string method;           // "exact" or "greedy"

    nlohmann::json to_json() const;
};

inline constexpr std::size_t kExactLimit = 14;

// Optimum over partitions into at most n cells, each covered by its min enclosing disk.
DiskCover nth_diameter_exact(const std::vector<Complex>& points, int n);
// Agglomerative merging by smallest radius-sum increase; an upper bound on diam_n.
DiskCover nth_diameter_greedy(const std::vector<Complex>& points, int n);

} // namespace tmlab::covering
