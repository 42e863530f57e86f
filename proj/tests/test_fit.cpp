#include <cmath>
#include <vector>

#include <doctest.h>

#include "pea/fit.hpp"
#include "pea/objectives.hpp"
#include "pea/rng.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

pea::DataMatrix matrix(std::initializer_list<std::initializer_list<double>> rows) {
    pea::DataMatrix X(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t l = 0;
        for (double v : r) X.at(i, l++) = v;
        ++i;
    }
    return X;
}

pea::DirectionMatrix directions(std::initializer_list<std::initializer_list<double>> rows) {
    pea::DirectionMatrix U(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t l = 0;
        for (double v : r) U.at(i, l++) = v;
        ++i;
    }
    return U;
}

pea::DataMatrix ellipse_points(std::size_t n, double r1, double r2, double c1 = 0.0,
                               double c2 = 0.0) {
    pea::DataMatrix X(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        double theta = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
        X.at(i, 0) = r1 * std::cos(theta) + c1;
        X.at(i, 1) = r2 * std::sin(theta) + c2;
    }
    return X;
}

pea::DataMatrix random_matrix(std::size_t n, std::size_t p, pea::Rng& rng, double span = 5.0) {
    pea::DataMatrix X(n, p);
    for (double& v : X.values) v = rng.uniform(-span, span);
    return X;
}

}  // namespace

TEST_SUITE("fit") {

TEST_CASE("update_directions hand examples") {
    pea::EllipseParams e;
    e.mu = {0.0, 0.0};
    e.w = {1.0, 1.0};
    auto U = pea::update_directions(matrix({{3.0, 4.0}}), e);
    CHECK(U.at(0, 0) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(U.at(0, 1) == doctest::Approx(0.8).epsilon(1e-15));

    e.mu = {1.0, 0.0};
    e.w = {2.0, 1.0};
    U = pea::update_directions(matrix({{2.0, 0.0}}), e);
    CHECK(U.at(0, 0) == 1.0);
    CHECK(U.at(0, 1) == 0.0);

    e.mu = {1.0, 1.0};
    e.w = {1.0, 1.0};
    U = pea::update_directions(matrix({{1.0, 1.0}}), e);
    CHECK(U.at(0, 0) == 1.0);  // degenerate fallback e1
    CHECK(U.at(0, 1) == 0.0);
}

TEST_CASE("update_directions rows are unit norm within 1e-12") {
    pea::Rng rng(21);
    pea::DataMatrix X = random_matrix(60, 3, rng);
    pea::EllipseParams e;
    e.mu = {0.1, -0.2, 0.4};
    e.w = {0.5, 2.0, 1.3};
    auto U = pea::update_directions(X, e);
    for (std::size_t i = 0; i < U.n; ++i) {
        double s = 0.0;
        for (std::size_t l = 0; l < U.p; ++l) s += U.at(i, l) * U.at(i, l);
        CHECK(std::fabs(std::sqrt(s) - 1.0) <= 1e-12);
    }
    CHECK_NOTHROW(pea::validate(U));
}

TEST_CASE("update_center hand examples") {
    auto mu = pea::update_center(matrix({{1.0}, {3.0}}), {1.0}, directions({{1.0}, {-1.0}}));
    CHECK(mu[0] == 2.0);
    mu = pea::update_center(matrix({{1.0}, {3.0}}), {1.0}, directions({{1.0}, {1.0}}));
    CHECK(mu[0] == 1.0);
    mu = pea::update_center(matrix({{5.0}}), {2.0}, directions({{1.0}}));
    CHECK(mu[0] == 4.5);
}

TEST_CASE("update_center rejects nonpositive weights") {
    CHECK_THROWS_AS(pea::update_center(matrix({{1.0}}), {0.0}, directions({{1.0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(pea::update_center(matrix({{1.0}}), {-1.0}, directions({{1.0}})),
                    std::invalid_argument);
}

TEST_CASE("clamp matches the piecewise definition") {
    CHECK(pea::clamp(0.5, 1.0, 2.0) == 1.0);
    CHECK(pea::clamp(3.0, 1.0, 2.0) == 2.0);
    CHECK(pea::clamp(1.5, 1.0, 2.0) == 1.5);
    CHECK_THROWS_AS(pea::clamp(0.0, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("update_weights hand examples") {
    auto X = matrix({{-2.0}, {2.0}});
    auto U = directions({{-1.0}, {1.0}});
    CHECK(pea::update_weights(X, {0.0}, U, 0.1, 10.0)[0] == 0.5);
    CHECK(pea::update_weights(X, {0.0}, U, 1.0, 10.0)[0] == 1.0);
    CHECK(pea::update_weights(matrix({{3.0}, {3.0}}), {3.0}, U, 0.1, 10.0)[0] == 10.0);
}

TEST_CASE("update_weights always lands inside the box") {
    pea::Rng rng(22);
    for (int rep = 0; rep < 30; ++rep) {
        pea::DataMatrix X = random_matrix(15, 2, rng);
        pea::EllipseParams e;
        e.mu = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        e.w = {rng.uniform(0.3, 2), rng.uniform(0.3, 2)};
        auto U = pea::update_directions(X, e);
        auto mu = pea::update_center(X, e.w, U);
        auto w = pea::update_weights(X, mu, U, 0.4, 1.8);
        for (double wl : w) {
            CHECK(wl >= 0.4);
            CHECK(wl <= 1.8);
        }
    }
}

TEST_CASE("init_params hand examples") {
    pea::FitConfig cfg;
    cfg.lambda_lo = 0.1;
    cfg.lambda_hi = 10.0;
    auto e = pea::init_params(matrix({{0, 0}, {2, 0}, {0, 2}, {2, 2}}), cfg);
    CHECK(e.mu == std::vector<double>{1.0, 1.0});
    CHECK(e.w == std::vector<double>{1.0, 1.0});

    e = pea::init_params(matrix({{5, 5}, {5, 5}, {5, 5}}), cfg);
    CHECK(e.mu == std::vector<double>{5.0, 5.0});
    CHECK(e.w == std::vector<double>{10.0, 10.0});

    e = pea::init_params(matrix({{-1.0}, {1.0}}), cfg);
    CHECK(e.mu == std::vector<double>{0.0});
    CHECK(e.w == std::vector<double>{1.0});
}

TEST_CASE("fit recovers an exact ellipse from noiseless points") {
    pea::DataMatrix X = ellipse_points(500, 2.0, 1.0);
    pea::FitConfig cfg;
    cfg.lambda_lo = 0.1;
    cfg.lambda_hi = 10.0;
    cfg.tol = 1e-14;
    auto report = pea::fit(X, cfg);
    CHECK(pea::reduced_objective(X, report.params) < 1e-12);
    CHECK(std::fabs(report.params.w[0] - 0.5) < 1e-6);
    CHECK(std::fabs(report.params.w[1] - 1.0) < 1e-6);
    CHECK(std::fabs(report.params.mu[0]) < 1e-6);
    CHECK(std::fabs(report.params.mu[1]) < 1e-6);
}

TEST_CASE("fit on the unit circle under tight bounds") {
    pea::DataMatrix X = ellipse_points(200, 1.0, 1.0);
    pea::FitConfig cfg;
    cfg.lambda_lo = 0.5;
    cfg.lambda_hi = 2.0;
    cfg.tol = 1e-14;
    auto report = pea::fit(X, cfg);
    CHECK(std::fabs(report.params.w[0] - 1.0) < 1e-6);
    CHECK(std::fabs(report.params.w[1] - 1.0) < 1e-6);
    CHECK(std::fabs(report.params.mu[0]) < 1e-6);
    CHECK(std::fabs(report.params.mu[1]) < 1e-6);
    CHECK(report.objective_trace.back() < 1e-12);
}

TEST_CASE("fit interpolates a single point exactly") {
    pea::FitConfig cfg;
    cfg.lambda_lo = 0.1;
    cfg.lambda_hi = 10.0;
    auto report = pea::fit(matrix({{1.0, 0.0}}), cfg);
    CHECK(report.objective_trace.back() < 1e-20);
}

TEST_CASE("objective trace is non-increasing and parameters stay feasible") {
    pea::Rng rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        std::size_t n = 10 + rng.below(40);
        std::size_t p = 1 + rng.below(4);
        pea::DataMatrix X = random_matrix(n, p, rng);
        pea::FitConfig cfg;
        auto report = pea::fit(X, cfg);
        for (std::size_t t = 1; t < report.objective_trace.size(); ++t)
            CHECK(report.objective_trace[t] <= report.objective_trace[t - 1] + 1e-10);
        for (double wl : report.params.w) {
            CHECK(wl >= cfg.lambda_lo);
            CHECK(wl <= cfg.lambda_hi);
        }
        CHECK(report.iterations == static_cast<int>(report.objective_trace.size()));
    }
}

TEST_CASE("per-step monotonicity across the three block updates") {
    pea::Rng rng(24);
    for (int rep = 0; rep < 20; ++rep) {
        std::size_t n = 10 + rng.below(30);
        std::size_t p = 1 + rng.below(3);
        pea::DataMatrix X = random_matrix(n, p, rng);
        pea::EllipseParams e;
        e.lambda_lo = 0.05;
        e.lambda_hi = 20.0;
        for (std::size_t l = 0; l < p; ++l) {
            e.mu.push_back(rng.uniform(-2, 2));
            e.w.push_back(rng.uniform(0.05, 20.0));
        }
        pea::DirectionMatrix U(n, p);
        for (std::size_t i = 0; i < n; ++i) U.at(i, 0) = 1.0;
        double f = pea::full_objective(X, e, U);
        for (int t = 0; t < 8; ++t) {
            U = pea::update_directions(X, e);
            double f1 = pea::full_objective(X, e, U);
            CHECK(f1 <= f + 1e-10);
            e.mu = pea::update_center(X, e.w, U);
            double f2 = pea::full_objective(X, e, U);
            CHECK(f2 <= f1 + 1e-10);
            e.w = pea::update_weights(X, e.mu, U, e.lambda_lo, e.lambda_hi);
            double f3 = pea::full_objective(X, e, U);
            CHECK(f3 <= f2 + 1e-10);
            f = f3;
        }
    }
}

// Even on integer data an integer shift is not bit-exact: the center update
// adds a non-integer correction to the column mean, and that sum rounds
// differently once the mean moves binades. The drift stays at ulp scale.
TEST_CASE("translation equivariance is tight on integer data") {
    pea::Rng rng(25);
    pea::DataMatrix X(30, 2);
    for (double& v : X.values) v = std::floor(rng.uniform(-9, 9));
    pea::FitConfig cfg;
    auto base = pea::fit(X, cfg);

    pea::DataMatrix shifted = X;
    const double t0 = 7.0, t1 = -3.0;
    for (std::size_t i = 0; i < X.n; ++i) {
        shifted.at(i, 0) += t0;
        shifted.at(i, 1) += t1;
    }
    auto moved = pea::fit(shifted, cfg);
    CHECK(moved.params.w[0] == doctest::Approx(base.params.w[0]).epsilon(1e-12));
    CHECK(moved.params.w[1] == doctest::Approx(base.params.w[1]).epsilon(1e-12));
    CHECK(moved.params.mu[0] == doctest::Approx(base.params.mu[0] + t0).epsilon(1e-12));
    CHECK(moved.params.mu[1] == doctest::Approx(base.params.mu[1] + t1).epsilon(1e-12));
    CHECK(moved.objective_trace.back() ==
          doctest::Approx(base.objective_trace.back()).epsilon(1e-10));
}

TEST_CASE("translation equivariance holds within 1e-10 on real data") {
    pea::Rng rng(26);
    pea::DataMatrix X = random_matrix(40, 2, rng, 2.0);
    pea::FitConfig cfg;
    auto base = pea::fit(X, cfg);

    pea::DataMatrix shifted = X;
    const double t0 = 0.773, t1 = -1.912;
    for (std::size_t i = 0; i < X.n; ++i) {
        shifted.at(i, 0) += t0;
        shifted.at(i, 1) += t1;
    }
    auto moved = pea::fit(shifted, cfg);
    CHECK(moved.params.mu[0] == doctest::Approx(base.params.mu[0] + t0).epsilon(1e-10));
    CHECK(moved.params.mu[1] == doctest::Approx(base.params.mu[1] + t1).epsilon(1e-10));
    CHECK(moved.params.w[0] == doctest::Approx(base.params.w[0]).epsilon(1e-10));
    CHECK(moved.params.w[1] == doctest::Approx(base.params.w[1]).epsilon(1e-10));
}

TEST_CASE("scale equivariance is exact for power-of-two scales") {
    pea::Rng rng(27);
    pea::DataMatrix X = random_matrix(40, 2, rng, 2.0);
    pea::FitConfig cfg;
    cfg.lambda_lo = 0.05;
    cfg.lambda_hi = 20.0;
    auto base = pea::fit(X, cfg);
    // Keep both runs strictly inside the box.
    REQUIRE(base.params.w[0] > cfg.lambda_lo);
    REQUIRE(base.params.w[0] < cfg.lambda_hi);

    const double s = 2.0;
    pea::DataMatrix scaled = X;
    for (std::size_t i = 0; i < X.n; ++i) scaled.at(i, 0) *= s;
    pea::FitConfig scfg = cfg;
    scfg.lambda_lo = cfg.lambda_lo / s;
    scfg.lambda_hi = cfg.lambda_hi / s;
    auto out = pea::fit(scaled, scfg);
    CHECK(out.params.w[0] == base.params.w[0] / s);
    CHECK(out.params.w[1] == base.params.w[1]);
    CHECK(out.params.mu[0] == base.params.mu[0] * s);
    CHECK(out.params.mu[1] == base.params.mu[1]);
    CHECK(out.objective_trace == base.objective_trace);
}

TEST_CASE("refitting from a converged fit is a fixed point") {
    pea::Rng rng(28);
    pea::DataMatrix X = random_matrix(60, 2, rng);
    pea::FitConfig cfg;
    auto first = pea::fit(X, cfg);
    REQUIRE(first.converged);
    auto again = pea::fit_from(X, first.params, cfg);
    double f0 = again.objective_trace.front();
    double f1 = again.objective_trace.back();
    CHECK(std::fabs(f0 - f1) <= cfg.tol * std::max(1.0, f0));
}

TEST_CASE("fit config validation") {
    pea::FitConfig cfg;
    cfg.lambda_lo = 0.0;
    CHECK_THROWS_AS(pea::validate(cfg), std::invalid_argument);
    cfg = pea::FitConfig{};
    cfg.lambda_lo = 5.0;
    cfg.lambda_hi = 1.0;
    CHECK_THROWS_AS(pea::validate(cfg), std::invalid_argument);
    cfg = pea::FitConfig{};
    cfg.max_iter = 0;
    CHECK_THROWS_AS(pea::validate(cfg), std::invalid_argument);
    cfg = pea::FitConfig{};
    cfg.tol = 0.0;
    CHECK_THROWS_AS(pea::validate(cfg), std::invalid_argument);
}

}  // TEST_SUITE
