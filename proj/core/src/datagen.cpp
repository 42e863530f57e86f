#include "pea/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pea/errors.hpp"
#include "pea/rng.hpp"

namespace pea {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void validate(const ArcSpec& spec) {
    if (spec.center.size() != 2 || spec.radii.size() != 2)
        throw std::invalid_argument("arc spec: arcs are planar (p = 2)");
    for (double r : spec.radii)
        if (!(r > 0.0)) throw std::invalid_argument("arc spec: radii must be positive");
    if (!(spec.theta_lo <= spec.theta_hi))
        throw std::invalid_argument("arc spec: need theta_lo <= theta_hi");
    if (spec.n < 1) throw std::invalid_argument("arc spec: n must be >= 1");
    if (!(spec.noise_sd >= 0.0))
        throw std::invalid_argument("arc spec: noise_sd must be nonnegative");
}

DataMatrix gen_arc(const ArcSpec& spec, std::uint64_t seed) {
    validate(spec);
    Rng rng(seed);
    DataMatrix X(spec.n, 2);
    for (std::size_t i = 0; i < spec.n; ++i) {
        double theta = rng.uniform(spec.theta_lo, spec.theta_hi);
        double x = spec.radii[0] * std::cos(theta) + spec.center[0];
        double y = spec.radii[1] * std::sin(theta) + spec.center[1];
        if (spec.noise_sd > 0.0) {
            x += spec.noise_sd * rng.normal();
            y += spec.noise_sd * rng.normal();
        }
        X.at(i, 0) = x;
        X.at(i, 1) = y;
    }
    return X;
}

LabeledData gen_motivating(std::uint64_t seed) {
    ArcSpec arc;
    arc.center = {0.0, 0.0};
    arc.radii = {4.0, 3.0};
    arc.theta_lo = kPi / 4.0;
    arc.theta_hi = 3.0 * kPi / 4.0;
    arc.n = 100;
    arc.noise_sd = 0.3;

    DataMatrix first = gen_arc(arc, derive_seed(seed, 0));
    arc.center = {0.0, 2.0};
    DataMatrix second = gen_arc(arc, derive_seed(seed, 1));

    LabeledData out;
    out.X = DataMatrix(200, 2);
    for (std::size_t i = 0; i < 100; ++i)
        for (std::size_t l = 0; l < 2; ++l) {
            out.X.at(i, l) = first.at(i, l);
            out.X.at(100 + i, l) = second.at(i, l);
        }
    out.X = zscore(out.X);
    out.labels.assign(200, 0);
    for (std::size_t i = 100; i < 200; ++i) out.labels[i] = 1;
    return out;
}

DataMatrix zscore(const DataMatrix& X) {
    if (X.n < 2) throw DataError("zscore: need at least two rows");
    const double n = static_cast<double>(X.n);
    DataMatrix out(X.n, X.p);
    for (std::size_t l = 0; l < X.p; ++l) {
        double sx = 0.0;
        for (std::size_t i = 0; i < X.n; ++i) sx += X.at(i, l);
        double mean = sx / n;
        double sq = 0.0;
        for (std::size_t i = 0; i < X.n; ++i) {
            double d = X.at(i, l) - mean;
            sq += d * d;
        }
        double sd = std::sqrt(sq / n);
        if (sd <= 1e-12)
            throw DataError("zscore: column " + std::to_string(l + 1) + " is constant");
        for (std::size_t i = 0; i < X.n; ++i) out.at(i, l) = (X.at(i, l) - mean) / sd;
    }
    return out;
}

ScreenResult screen_variance(const DataMatrix& X, std::size_t m) {
    if (m < 1 || m > X.p)
        throw std::invalid_argument("screen_variance: need 1 <= m <= p");
    const double n = static_cast<double>(X.n);
    std::vector<double> var(X.p);
    for (std::size_t l = 0; l < X.p; ++l) {
        double sx = 0.0;
        for (std::size_t i = 0; i < X.n; ++i) sx += X.at(i, l);
        double mean = sx / n;
        double sq = 0.0;
        for (std::size_t i = 0; i < X.n; ++i) {
            double d = X.at(i, l) - mean;
            sq += d * d;
        }
        var[l] = sq / n;
    }
    std::vector<std::size_t> order(X.p);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return var[a] > var[b]; });
    order.resize(m);
    std::sort(order.begin(), order.end());

    ScreenResult out;
    out.kept = order;
    out.X = DataMatrix(X.n, m);
    for (std::size_t i = 0; i < X.n; ++i)
        for (std::size_t c = 0; c < m; ++c) out.X.at(i, c) = X.at(i, order[c]);
    return out;
}

}  // namespace pea
