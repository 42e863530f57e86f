#pragma once

#include <cstdint>
#include <vector>

#include "pea/fit.hpp"
#include "pea/types.hpp"

namespace pea {

struct ClusterConfig {
    std::size_t k = 2;
    FitConfig fit;
    int max_outer_iter = 100;
    int n_init = 10;         // k-means initialization restarts
    std::uint64_t seed = 0;
    int inner_passes = 1;    // BCD passes per cluster per outer iteration
};

void validate(const ClusterConfig& cfg);

struct ClusterResult {
    ClusterModel model;
    std::vector<double> objective_trace;  // residual sum at stored assignments
    int outer_iterations = 0;
};

// Nearest-ellipse assignment; returns 1-based indices, ties to the lowest
// cluster index.
std::vector<std::size_t> assign(const DataMatrix& X, const std::vector<EllipseParams>& ellipses);

// Replacement parameters for an empty cluster: centered at the point with the
// largest residual under its currently assigned ellipse, weights copied from
// that ellipse. empty_j is 1-based.
EllipseParams handle_empty_cluster(const DataMatrix& X, const ClusterModel& model,
                                   std::size_t empty_j);

// Refit step: `passes` BCD passes over each cluster's members, warm-started
// from its current parameters. Empty clusters are reseeded via
// handle_empty_cluster.
ClusterModel refit_clusters(const DataMatrix& X, const std::vector<std::size_t>& assignments,
                            const ClusterModel& model, const FitConfig& fit_cfg,
                            int passes = 1);

// Clustering driver: k-means initialization, then alternate refit_clusters
// and assign until assignments stabilize, the objective change drops below
// fit.tol, or max_outer_iter is reached. Afterwards each cluster's ellipse is
// refit to convergence on its final members (assignments unchanged).
ClusterResult cluster(const DataMatrix& X, const ClusterConfig& config);

// Permutation-minimal model distance: min over cluster permutations of
// ||W1 - O W2||_F^2 + ||M1 - O M2||_F^2. Exact; requires k <= 10.
double model_distance(const ClusterModel& a, const ClusterModel& b);

}  // namespace pea
