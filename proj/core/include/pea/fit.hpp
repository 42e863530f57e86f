#pragma once

#include <cstdint>
#include <vector>

#include "pea/objectives.hpp"
#include "pea/types.hpp"

namespace pea {

struct FitConfig {
    double lambda_lo = 0.05;
    double lambda_hi = 20.0;
    int max_iter = 500;
    double tol = 1e-8;  // relative objective-change stopping threshold
    std::uint64_t seed = 0;
};

void validate(const FitConfig& cfg);

struct FitReport {
    EllipseParams params;
    DirectionMatrix directions;
    std::vector<double> objective_trace;  // full objective after each iteration
    int iterations = 0;
    bool converged = false;
};

// Direction step: u_i = w o (x_i - mu) / ||...||; rows with norm < 1e-12
// fall back to e1.
DirectionMatrix update_directions(const DataMatrix& X, const EllipseParams& params);

// Center step: mu_l = mean_i x_il - (1 / (n w_l)) sum_i u_il. Requires w_l > 0.
std::vector<double> update_center(const DataMatrix& X, const std::vector<double>& w,
                                  const DirectionMatrix& U);

// T(x, lo, hi): lo if x < lo, hi if x > hi, x otherwise.
double clamp(double x, double lo, double hi);

// Weight step: w_l = T(sum_i u_il (x_il - mu_l) / sum_i (x_il - mu_l)^2, lo, hi);
// coordinates with denominator < 1e-12 get lambda_hi.
std::vector<double> update_weights(const DataMatrix& X, const std::vector<double>& mu,
                                   const DirectionMatrix& U, double lo, double hi);

// mu = column means; w_l = clamp(1 / sd_l) with population sd, lambda_hi when
// sd_l < 1e-12.
EllipseParams init_params(const DataMatrix& X, const FitConfig& config);

// Block-coordinate descent, direction -> center -> weight steps per
// iteration, stopping when |f_t - f_{t+1}| <= tol * max(1, f_t) or at
// max_iter.
FitReport fit(const DataMatrix& X, const FitConfig& config);

// Same iteration loop but warm-started from the given parameters; used by the
// clustering driver for per-cluster refits.
FitReport fit_from(const DataMatrix& X, const EllipseParams& start, const FitConfig& config);

}  // namespace pea
