#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pea/types.hpp"

namespace pea {

// Planar ellipse arc with per-coordinate Gaussian noise.
struct ArcSpec {
    std::vector<double> center;
    std::vector<double> radii;
    double theta_lo = 0.0;
    double theta_hi = 0.0;  // theta_lo == theta_hi draws the single angle theta_lo
    std::size_t n = 1;
    double noise_sd = 0.0;
};

void validate(const ArcSpec& spec);

// Samples theta ~ Unif[theta_lo, theta_hi], maps through
// (r1 cos(theta) + c1, r2 sin(theta) + c2), then adds N(0, noise_sd^2) noise
// independently per coordinate. Deterministic given seed.
DataMatrix gen_arc(const ArcSpec& spec, std::uint64_t seed);

struct LabeledData {
    DataMatrix X;
    std::vector<long long> labels;
};

// The two-arc motivating dataset: arcs of radii (4,3) over [pi/4, 3pi/4] with
// noise sd 0.3, 100 points each, second arc shifted +2 in y; concatenated and
// z-scored. Labels: 100 zeros then 100 ones.
LabeledData gen_motivating(std::uint64_t seed);

// Columnwise (x - mean) / sd with population sd (divisor n). Constant columns
// (sd <= 1e-12) are rejected. Requires n >= 2.
DataMatrix zscore(const DataMatrix& X);

struct ScreenResult {
    DataMatrix X;
    std::vector<std::size_t> kept;  // 0-based column indices, ascending
};

// Keeps the m columns of highest variance (ties to the lower index).
ScreenResult screen_variance(const DataMatrix& X, std::size_t m);

}  // namespace pea
