#include "pea/fit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pea/parallel.hpp"

namespace pea {

namespace {

void check_dims(std::size_t have, std::size_t want, const char* what) {
    if (have != want)
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(have) + " vs " + std::to_string(want) + ")");
}

constexpr double kDegenerate = 1e-12;

}  // namespace

void validate(const FitConfig& cfg) {
    if (!(cfg.lambda_lo > 0.0) || !(cfg.lambda_lo <= cfg.lambda_hi))
        throw std::invalid_argument("fit config: need 0 < lambda_lo <= lambda_hi");
    if (cfg.max_iter < 1) throw std::invalid_argument("fit config: max_iter must be >= 1");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("fit config: tol must be positive");
}

DirectionMatrix update_directions(const DataMatrix& X, const EllipseParams& params) {
    check_dims(params.mu.size(), X.p, "update_directions mu");
    check_dims(params.w.size(), X.p, "update_directions w");
    DirectionMatrix U(X.n, X.p);
    parallel_for(0, X.n, [&](std::size_t i) {
        const double* x = X.row(i);
        double* u = U.row(i);
        double s = 0.0;
        for (std::size_t l = 0; l < X.p; ++l) {
            u[l] = params.w[l] * (x[l] - params.mu[l]);
            s += u[l] * u[l];
        }
        double norm = std::sqrt(s);
        if (norm < kDegenerate) {
            u[0] = 1.0;
            for (std::size_t l = 1; l < X.p; ++l) u[l] = 0.0;
        } else {
            for (std::size_t l = 0; l < X.p; ++l) u[l] /= norm;
        }
    });
    return U;
}

std::vector<double> update_center(const DataMatrix& X, const std::vector<double>& w,
                                  const DirectionMatrix& U) {
    check_dims(w.size(), X.p, "update_center w");
    check_dims(U.p, X.p, "update_center U columns");
    check_dims(U.n, X.n, "update_center U rows");
    for (double wl : w)
        if (!(wl > 0.0)) throw std::invalid_argument("update_center: weights must be positive");
    const double n = static_cast<double>(X.n);
    std::vector<double> mu(X.p);
    for (std::size_t l = 0; l < X.p; ++l) {
        double sx = 0.0;
        double su = 0.0;
        for (std::size_t i = 0; i < X.n; ++i) {
            sx += X.at(i, l);
            su += U.at(i, l);
        }
        mu[l] = sx / n - su / (n * w[l]);
    }
    return mu;
}

double clamp(double x, double lo, double hi) {
    if (lo > hi) throw std::invalid_argument("clamp: lo > hi");
    if (x < lo) return lo;
    if (x > hi) return hi;
    return x;
}

std::vector<double> update_weights(const DataMatrix& X, const std::vector<double>& mu,
                                   const DirectionMatrix& U, double lo, double hi) {
    check_dims(mu.size(), X.p, "update_weights mu");
    check_dims(U.p, X.p, "update_weights U columns");
    check_dims(U.n, X.n, "update_weights U rows");
    if (lo > hi) throw std::invalid_argument("update_weights: lo > hi");
    std::vector<double> w(X.p);
    for (std::size_t l = 0; l < X.p; ++l) {
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < X.n; ++i) {
            double d = X.at(i, l) - mu[l];
            num += U.at(i, l) * d;
            den += d * d;
        }
        w[l] = den < kDegenerate ? hi : clamp(num / den, lo, hi);
    }
    return w;
}

EllipseParams init_params(const DataMatrix& X, const FitConfig& config) {
    validate(config);
    if (X.n < 1) throw std::invalid_argument("init_params: empty data");
    const double n = static_cast<double>(X.n);
    EllipseParams e;
    e.lambda_lo = config.lambda_lo;
    e.lambda_hi = config.lambda_hi;
    e.mu.resize(X.p);
    e.w.resize(X.p);
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
        e.mu[l] = mean;
        e.w[l] = sd < kDegenerate ? config.lambda_hi : clamp(1.0 / sd, config.lambda_lo, config.lambda_hi);
    }
    return e;
}

namespace {

FitReport run_bcd(const DataMatrix& X, EllipseParams params, const FitConfig& config) {
    FitReport report;
    report.objective_trace.reserve(static_cast<std::size_t>(config.max_iter));
    DirectionMatrix U;
    for (int t = 0; t < config.max_iter; ++t) {
        U = update_directions(X, params);
        params.mu = update_center(X, params.w, U);
        params.w = update_weights(X, params.mu, U, config.lambda_lo, config.lambda_hi);
        double f = full_objective(X, params, U);
        report.objective_trace.push_back(f);
        ++report.iterations;
        std::size_t m = report.objective_trace.size();
        if (m >= 2) {
            double prev = report.objective_trace[m - 2];
            if (std::fabs(prev - f) <= config.tol * std::max(1.0, prev)) {
                report.converged = true;
                break;
            }
        }
    }
    report.params = std::move(params);
    report.directions = std::move(U);
    return report;
}

}  // namespace

FitReport fit(const DataMatrix& X, const FitConfig& config) {
    validate(config);
    if (X.n < 1 || X.p < 1) throw std::invalid_argument("fit: empty data");
    return run_bcd(X, init_params(X, config), config);
}

FitReport fit_from(const DataMatrix& X, const EllipseParams& start, const FitConfig& config) {
    validate(config);
    if (X.n < 1 || X.p < 1) throw std::invalid_argument("fit_from: empty data");
    check_dims(start.mu.size(), X.p, "fit_from start mu");
    check_dims(start.w.size(), X.p, "fit_from start w");
    return run_bcd(X, start, config);
}

}  // namespace pea
