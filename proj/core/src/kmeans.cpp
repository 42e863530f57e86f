#include "pea/kmeans.hpp"

#include <limits>
#include <stdexcept>

#include "pea/parallel.hpp"

namespace pea {

namespace {

double dist2(const double* a, const double* b, std::size_t p) {
    double s = 0.0;
    for (std::size_t l = 0; l < p; ++l) {
        double d = a[l] - b[l];
        s += d * d;
    }
    return s;
}

struct SingleRun {
    std::vector<std::size_t> assignments;  // 0-based during the run
    DataMatrix centers;
    double wcss = 0.0;
    std::vector<double> trace;
};

SingleRun lloyd_single(const DataMatrix& X, std::size_t k, int max_iter, Rng& rng) {
    SingleRun run;
    run.centers = kmeanspp_init(X, k, rng);
    run.assignments.assign(X.n, 0);
    std::vector<std::size_t> prev(X.n, k);  // k = "unassigned" sentinel
    std::vector<std::size_t> counts(k, 0);

    for (int iter = 0; iter < max_iter; ++iter) {
        parallel_for(0, X.n, [&](std::size_t i) {
            std::size_t best = 0;
            double bd = dist2(X.row(i), run.centers.row(0), X.p);
            for (std::size_t j = 1; j < k; ++j) {
                double d = dist2(X.row(i), run.centers.row(j), X.p);
                if (d < bd) {
                    bd = d;
                    best = j;
                }
            }
            run.assignments[i] = best;
        });

        counts.assign(k, 0);
        for (std::size_t i = 0; i < X.n; ++i) ++counts[run.assignments[i]];
        for (std::size_t j = 0; j < k; ++j) {
            if (counts[j] > 0) continue;
            // Reseed at the point farthest from its center, never draining a
            // singleton cluster.
            std::size_t worst = X.n;
            double wd = -1.0;
            for (std::size_t i = 0; i < X.n; ++i) {
                if (counts[run.assignments[i]] <= 1) continue;
                double d = dist2(X.row(i), run.centers.row(run.assignments[i]), X.p);
                if (d > wd) {
                    wd = d;
                    worst = i;
                }
            }
            if (worst == X.n) continue;  // k > distinct points; leave empty
            --counts[run.assignments[worst]];
            run.assignments[worst] = j;
            counts[j] = 1;
        }

        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t l = 0; l < X.p; ++l) run.centers.at(j, l) = 0.0;
        }
        for (std::size_t i = 0; i < X.n; ++i) {
            std::size_t j = run.assignments[i];
            for (std::size_t l = 0; l < X.p; ++l) run.centers.at(j, l) += X.at(i, l);
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (counts[j] == 0) continue;
            double c = static_cast<double>(counts[j]);
            for (std::size_t l = 0; l < X.p; ++l) run.centers.at(j, l) /= c;
        }

        double wcss = 0.0;
        for (std::size_t i = 0; i < X.n; ++i)
            wcss += dist2(X.row(i), run.centers.row(run.assignments[i]), X.p);
        run.trace.push_back(wcss);

        if (run.assignments == prev) break;
        prev = run.assignments;
    }

    run.wcss = run.trace.empty() ? 0.0 : run.trace.back();
    return run;
}

}  // namespace

DataMatrix kmeanspp_init(const DataMatrix& X, std::size_t k, Rng& rng) {
    if (k < 1 || k > X.n) throw std::invalid_argument("kmeanspp_init: need 1 <= k <= n");
    DataMatrix centers(k, X.p);
    std::size_t first = static_cast<std::size_t>(rng.below(X.n));
    for (std::size_t l = 0; l < X.p; ++l) centers.at(0, l) = X.at(first, l);

    std::vector<double> d2(X.n);
    for (std::size_t i = 0; i < X.n; ++i) d2[i] = dist2(X.row(i), centers.row(0), X.p);

    for (std::size_t j = 1; j < k; ++j) {
        double total = 0.0;
        for (std::size_t i = 0; i < X.n; ++i) total += d2[i];
        std::size_t pick = 0;
        if (total <= 0.0) {
            // All remaining points coincide with chosen centers.
            double best = -1.0;
            for (std::size_t i = 0; i < X.n; ++i) {
                if (d2[i] > best) {
                    best = d2[i];
                    pick = i;
                }
            }
        } else {
            double r = rng.uniform01() * total;
            double cum = 0.0;
            std::size_t last_positive = 0;
            bool found = false;
            for (std::size_t i = 0; i < X.n; ++i) {
                if (d2[i] <= 0.0) continue;
                last_positive = i;
                cum += d2[i];
                if (cum > r) {
                    pick = i;
                    found = true;
                    break;
                }
            }
            if (!found) pick = last_positive;
        }
        for (std::size_t l = 0; l < X.p; ++l) centers.at(j, l) = X.at(pick, l);
        for (std::size_t i = 0; i < X.n; ++i) {
            double d = dist2(X.row(i), centers.row(j), X.p);
            if (d < d2[i]) d2[i] = d;
        }
    }
    return centers;
}

DataMatrix kmeanspp_init(const DataMatrix& X, std::size_t k, std::uint64_t seed) {
    Rng rng(seed);
    return kmeanspp_init(X, k, rng);
}

KmeansResult lloyd(const DataMatrix& X, std::size_t k, int n_init, int max_iter,
                   std::uint64_t seed) {
    if (k < 1 || k > X.n) throw std::invalid_argument("lloyd: need 1 <= k <= n");
    if (n_init < 1) throw std::invalid_argument("lloyd: n_init must be >= 1");
    if (max_iter < 1) throw std::invalid_argument("lloyd: max_iter must be >= 1");

    SingleRun best;
    bool have = false;
    for (int r = 0; r < n_init; ++r) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        SingleRun run = lloyd_single(X, k, max_iter, rng);
        if (!have || run.wcss < best.wcss) {
            best = std::move(run);
            have = true;
        }
    }

    KmeansResult result;
    result.centers = std::move(best.centers);
    result.wcss = best.wcss;
    result.objective_trace = std::move(best.trace);
    result.assignments.resize(X.n);
    for (std::size_t i = 0; i < X.n; ++i) result.assignments[i] = best.assignments[i] + 1;
    return result;
}

}  // namespace pea
