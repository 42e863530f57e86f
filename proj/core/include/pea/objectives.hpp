#pragma once

#include <cstddef>

#include "pea/types.hpp"

namespace pea {

// Full BCD objective: f(mu, w, U) = sum_i || w o (x_i - mu) - u_i ||^2
// (a sum, not a mean).
double full_objective(const DataMatrix& X, const EllipseParams& params,
                      const DirectionMatrix& U);

// phi(x) = (|| w o (x - mu) ||_2 - 1)^2; equals 1 at x = mu.
double point_residual(const double* x, std::size_t p, const EllipseParams& params);
double point_residual(const std::vector<double>& x, const EllipseParams& params);

// The full objective with U eliminated at its closed-form optimum, returned
// as the MEAN over samples: (1/n) sum_i phi(x_i).
double reduced_objective(const DataMatrix& X, const EllipseParams& params);

// Clustering objective: sum_i min_j phi_j(x_i). Ignores stored assignments.
double cluster_objective(const DataMatrix& X, const ClusterModel& model);

}  // namespace pea
