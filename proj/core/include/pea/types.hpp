#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pea/errors.hpp"

namespace pea {

// Row-major n x p matrix of samples.
struct DataMatrix {
    std::size_t n = 0;
    std::size_t p = 0;
    std::vector<double> values;  // values[i * p + l]

    DataMatrix() = default;
    DataMatrix(std::size_t n_, std::size_t p_, double fill = 0.0)
        : n(n_), p(p_), values(n_ * p_, fill) {}

    double& at(std::size_t i, std::size_t l) { return values[i * p + l]; }
    double at(std::size_t i, std::size_t l) const { return values[i * p + l]; }
    const double* row(std::size_t i) const { return values.data() + i * p; }
    double* row(std::size_t i) { return values.data() + i * p; }
};

// Throws DataError unless X has n >= 1, p >= 1 and only finite entries.
inline void validate(const DataMatrix& X, const std::string& what = "data matrix") {
    if (X.n < 1 || X.p < 1)
        throw DataError(what + ": must have at least one row and one column");
    if (X.values.size() != X.n * X.p)
        throw DataError(what + ": storage size does not match dimensions");
    for (std::size_t i = 0; i < X.n; ++i)
        for (std::size_t l = 0; l < X.p; ++l)
            if (!std::isfinite(X.at(i, l)))
                throw DataError(what + ": non-finite entry at row " + std::to_string(i + 1) +
                                ", column " + std::to_string(l + 1));
}

// Axis-aligned ellipsoid: center mu, inverse half-axis weights w (w_l = 1/r_l),
// with the box constraint w in [lambda_lo, lambda_hi]^p.
struct EllipseParams {
    std::vector<double> mu;
    std::vector<double> w;
    double lambda_lo = 0.05;
    double lambda_hi = 20.0;
};

inline void validate(const EllipseParams& e) {
    if (!(e.lambda_lo > 0.0) || !(e.lambda_lo <= e.lambda_hi))
        throw std::invalid_argument("ellipse bounds: need 0 < lambda_lo <= lambda_hi");
    if (e.mu.size() != e.w.size())
        throw std::invalid_argument("ellipse params: mu and w dimension mismatch");
    for (double m : e.mu)
        if (!std::isfinite(m)) throw std::invalid_argument("ellipse params: non-finite center");
    for (double wl : e.w)
        if (!(wl >= e.lambda_lo) || !(wl <= e.lambda_hi))
            throw std::invalid_argument("ellipse params: weight outside [lambda_lo, lambda_hi]");
}

// Unit direction vectors, one row per sample.
struct DirectionMatrix {
    std::size_t n = 0;
    std::size_t p = 0;
    std::vector<double> rows;  // rows[i * p + l]

    DirectionMatrix() = default;
    DirectionMatrix(std::size_t n_, std::size_t p_) : n(n_), p(p_), rows(n_ * p_, 0.0) {}

    double& at(std::size_t i, std::size_t l) { return rows[i * p + l]; }
    double at(std::size_t i, std::size_t l) const { return rows[i * p + l]; }
    const double* row(std::size_t i) const { return rows.data() + i * p; }
    double* row(std::size_t i) { return rows.data() + i * p; }
};

inline void validate(const DirectionMatrix& U) {
    for (std::size_t i = 0; i < U.n; ++i) {
        double s = 0.0;
        for (std::size_t l = 0; l < U.p; ++l) s += U.at(i, l) * U.at(i, l);
        if (std::fabs(std::sqrt(s) - 1.0) > 1e-12)
            throw std::invalid_argument("direction matrix: row " + std::to_string(i + 1) +
                                        " is not unit norm");
    }
}

// k ellipses plus a 1-based cluster index per sample (c_i in {1..k}).
struct ClusterModel {
    std::vector<EllipseParams> ellipses;
    std::vector<std::size_t> assignments;
    std::size_t k = 0;
};

inline void validate(const ClusterModel& model) {
    if (model.k == 0 || model.ellipses.size() != model.k)
        throw std::invalid_argument("cluster model: ellipse count does not match k");
    for (const auto& e : model.ellipses) validate(e);
    for (std::size_t c : model.assignments)
        if (c < 1 || c > model.k)
            throw std::invalid_argument("cluster model: assignment index outside {1..k}");
}

}  // namespace pea
