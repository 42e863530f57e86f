#include "pea/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pea/kmeans.hpp"
#include "pea/objectives.hpp"
#include "pea/parallel.hpp"

namespace pea {

void validate(const ClusterConfig& cfg) {
    if (cfg.k < 1) throw std::invalid_argument("cluster config: k must be >= 1");
    if (cfg.max_outer_iter < 1)
        throw std::invalid_argument("cluster config: max_outer_iter must be >= 1");
    if (cfg.n_init < 1) throw std::invalid_argument("cluster config: n_init must be >= 1");
    if (cfg.inner_passes < 1)
        throw std::invalid_argument("cluster config: inner_passes must be >= 1");
    validate(cfg.fit);
}

std::vector<std::size_t> assign(const DataMatrix& X,
                                const std::vector<EllipseParams>& ellipses) {
    if (ellipses.empty()) throw std::invalid_argument("assign: no ellipses");
    for (const auto& e : ellipses)
        if (e.mu.size() != X.p || e.w.size() != X.p)
            throw std::invalid_argument("assign: ellipse dimension mismatch");
    std::vector<std::size_t> out(X.n);
    parallel_for(0, X.n, [&](std::size_t i) {
        std::size_t best = 0;
        double br = point_residual(X.row(i), X.p, ellipses[0]);
        for (std::size_t j = 1; j < ellipses.size(); ++j) {
            double r = point_residual(X.row(i), X.p, ellipses[j]);
            if (r < br) {
                br = r;
                best = j;
            }
        }
        out[i] = best + 1;
    });
    return out;
}

EllipseParams handle_empty_cluster(const DataMatrix& X, const ClusterModel& model,
                                   std::size_t empty_j) {
    if (empty_j < 1 || empty_j > model.k)
        throw std::invalid_argument("handle_empty_cluster: cluster index outside {1..k}");
    if (model.assignments.size() != X.n)
        throw std::invalid_argument("handle_empty_cluster: assignments size mismatch");
    std::size_t worst = 0;
    double wr = -1.0;
    for (std::size_t i = 0; i < X.n; ++i) {
        const EllipseParams& e = model.ellipses[model.assignments[i] - 1];
        double r = point_residual(X.row(i), X.p, e);
        if (r > wr) {
            wr = r;
            worst = i;
        }
    }
    EllipseParams seed = model.ellipses[model.assignments[worst] - 1];
    seed.mu.assign(X.row(worst), X.row(worst) + X.p);
    return seed;
}

namespace {

// One direction -> center -> weight pass over one cluster's gathered member rows.
void bcd_pass(const DataMatrix& sub, EllipseParams& e, const FitConfig& fit_cfg) {
    DirectionMatrix U = update_directions(sub, e);
    e.mu = update_center(sub, e.w, U);
    e.w = update_weights(sub, e.mu, U, fit_cfg.lambda_lo, fit_cfg.lambda_hi);
}

DataMatrix gather(const DataMatrix& X, const std::vector<std::size_t>& members) {
    DataMatrix sub(members.size(), X.p);
    for (std::size_t m = 0; m < members.size(); ++m)
        for (std::size_t l = 0; l < X.p; ++l) sub.at(m, l) = X.at(members[m], l);
    return sub;
}

std::vector<std::vector<std::size_t>> membership(const std::vector<std::size_t>& assignments,
                                                 std::size_t k) {
    std::vector<std::vector<std::size_t>> members(k);
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        std::size_t c = assignments[i];
        if (c < 1 || c > k)
            throw std::invalid_argument("assignments: cluster index outside {1..k}");
        members[c - 1].push_back(i);
    }
    return members;
}

// Sum of residuals at the stored assignments.
double objective_at(const DataMatrix& X, const std::vector<std::size_t>& assignments,
                    const std::vector<EllipseParams>& ellipses) {
    double total = 0.0;
    for (std::size_t i = 0; i < X.n; ++i)
        total += point_residual(X.row(i), X.p, ellipses[assignments[i] - 1]);
    return total;
}

}  // namespace

ClusterModel refit_clusters(const DataMatrix& X, const std::vector<std::size_t>& assignments,
                            const ClusterModel& model, const FitConfig& fit_cfg,
                            int passes) {
    if (passes < 1) throw std::invalid_argument("refit_clusters: passes must be >= 1");
    if (assignments.size() != X.n)
        throw std::invalid_argument("refit_clusters: assignments size mismatch");
    validate(fit_cfg);
    ClusterModel out = model;
    out.assignments = assignments;
    auto members = membership(assignments, out.k);
    for (std::size_t j = 0; j < out.k; ++j) {
        if (members[j].empty()) {
            out.ellipses[j] = handle_empty_cluster(X, out, j + 1);
            continue;
        }
        DataMatrix sub = gather(X, members[j]);
        for (int t = 0; t < passes; ++t) bcd_pass(sub, out.ellipses[j], fit_cfg);
    }
    return out;
}

ClusterResult cluster(const DataMatrix& X, const ClusterConfig& config) {
    validate(config);
    validate(X, "cluster input");
    if (config.k > X.n) throw std::invalid_argument("cluster: k exceeds sample count");

    KmeansResult init = lloyd(X, config.k, config.n_init, 100, config.seed);

    ClusterModel model;
    model.k = config.k;
    model.assignments = init.assignments;
    model.ellipses.resize(config.k);
    auto members = membership(model.assignments, config.k);
    for (std::size_t j = 0; j < config.k; ++j) {
        // A cluster k-means left empty gets a whole-data placeholder; the
        // first refit pass reseeds it properly.
        model.ellipses[j] =
            members[j].empty() ? init_params(X, config.fit) : init_params(gather(X, members[j]), config.fit);
    }

    ClusterResult result;
    double prev = -1.0;
    bool have_prev = false;
    for (int outer = 0; outer < config.max_outer_iter; ++outer) {
        model = refit_clusters(X, model.assignments, model, config.fit, config.inner_passes);
        std::vector<std::size_t> next = assign(X, model.ellipses);
        double obj = objective_at(X, next, model.ellipses);
        result.objective_trace.push_back(obj);
        ++result.outer_iterations;
        bool stable = next == model.assignments;
        model.assignments = std::move(next);
        if (stable) break;
        if (have_prev && std::fabs(prev - obj) <= config.fit.tol * std::max(1.0, prev)) break;
        prev = obj;
        have_prev = true;
    }

    // Final polish: converge each cluster's fit on its final members. The
    // partition is left untouched; only the reported parameters improve.
    members = membership(model.assignments, config.k);
    for (std::size_t j = 0; j < config.k; ++j) {
        if (members[j].empty()) continue;
        FitReport r = fit_from(gather(X, members[j]), model.ellipses[j], config.fit);
        model.ellipses[j] = r.params;
    }
    result.objective_trace.push_back(objective_at(X, model.assignments, model.ellipses));

    result.model = std::move(model);
    return result;
}

double model_distance(const ClusterModel& a, const ClusterModel& b) {
    if (a.k != b.k) throw std::invalid_argument("model_distance: cluster counts differ");
    if (a.k == 0) throw std::invalid_argument("model_distance: empty models");
    if (a.k > 10) throw std::invalid_argument("model_distance: only k <= 10 supported");
    const std::size_t p = a.ellipses[0].mu.size();
    for (const auto& e : a.ellipses)
        if (e.mu.size() != p || e.w.size() != p)
            throw std::invalid_argument("model_distance: dimension mismatch");
    for (const auto& e : b.ellipses)
        if (e.mu.size() != p || e.w.size() != p)
            throw std::invalid_argument("model_distance: dimension mismatch");

    std::vector<std::size_t> perm(a.k);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double d = 0.0;
        for (std::size_t j = 0; j < a.k; ++j) {
            const EllipseParams& ea = a.ellipses[j];
            const EllipseParams& eb = b.ellipses[perm[j]];
            for (std::size_t l = 0; l < p; ++l) {
                double dw = ea.w[l] - eb.w[l];
                double dm = ea.mu[l] - eb.mu[l];
                d += dw * dw + dm * dm;
            }
        }
        if (d < best) best = d;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace pea
