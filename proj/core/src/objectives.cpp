#include "pea/objectives.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pea {

namespace {

void check_dims(std::size_t have, std::size_t want, const char* what) {
    if (have != want)
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(have) + " vs " + std::to_string(want) + ")");
}

}  // namespace

double full_objective(const DataMatrix& X, const EllipseParams& params,
                      const DirectionMatrix& U) {
    check_dims(params.mu.size(), X.p, "full_objective mu");
    check_dims(params.w.size(), X.p, "full_objective w");
    check_dims(U.p, X.p, "full_objective U columns");
    check_dims(U.n, X.n, "full_objective U rows");
    double total = 0.0;
    for (std::size_t i = 0; i < X.n; ++i) {
        const double* x = X.row(i);
        const double* u = U.row(i);
        double s = 0.0;
        for (std::size_t l = 0; l < X.p; ++l) {
            double d = params.w[l] * (x[l] - params.mu[l]) - u[l];
            s += d * d;
        }
        total += s;
    }
    return total;
}

double point_residual(const double* x, std::size_t p, const EllipseParams& params) {
    check_dims(params.mu.size(), p, "point_residual mu");
    check_dims(params.w.size(), p, "point_residual w");
    double s = 0.0;
    for (std::size_t l = 0; l < p; ++l) {
        double v = params.w[l] * (x[l] - params.mu[l]);
        s += v * v;
    }
    double d = std::sqrt(s) - 1.0;
    return d * d;
}

double point_residual(const std::vector<double>& x, const EllipseParams& params) {
    return point_residual(x.data(), x.size(), params);
}

double reduced_objective(const DataMatrix& X, const EllipseParams& params) {
    if (X.n < 1) throw std::invalid_argument("reduced_objective: empty data");
    double total = 0.0;
    for (std::size_t i = 0; i < X.n; ++i)
        total += point_residual(X.row(i), X.p, params);
    return total / static_cast<double>(X.n);
}

double cluster_objective(const DataMatrix& X, const ClusterModel& model) {
    if (model.k == 0 || model.ellipses.empty())
        throw std::invalid_argument("cluster_objective: model has no clusters");
    for (const auto& e : model.ellipses) {
        check_dims(e.mu.size(), X.p, "cluster_objective mu");
        check_dims(e.w.size(), X.p, "cluster_objective w");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < X.n; ++i) {
        double best = point_residual(X.row(i), X.p, model.ellipses[0]);
        for (std::size_t j = 1; j < model.ellipses.size(); ++j) {
            double r = point_residual(X.row(i), X.p, model.ellipses[j]);
            if (r < best) best = r;
        }
        total += best;
    }
    return total;
}

}  // namespace pea
