#pragma once

#include <cstdint>
#include <vector>

#include "pea/rng.hpp"
#include "pea/types.hpp"

namespace pea {

struct KmeansResult {
    std::vector<std::size_t> assignments;  // 1-based cluster indices
    DataMatrix centers;                    // k x p
    double wcss = 0.0;
    std::vector<double> objective_trace;   // WCSS after each Lloyd iteration
};

// k-means++ seeding: first center uniform, then proportional to squared
// distance from the nearest chosen center.
DataMatrix kmeanspp_init(const DataMatrix& X, std::size_t k, Rng& rng);
DataMatrix kmeanspp_init(const DataMatrix& X, std::size_t k, std::uint64_t seed);

// Lloyd's algorithm, best of n_init restarts by WCSS. Assignment ties go to
// the lowest index; empty clusters are reseeded at the worst-fit point.
KmeansResult lloyd(const DataMatrix& X, std::size_t k, int n_init, int max_iter,
                   std::uint64_t seed);

}  // namespace pea
