#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "bgclust/power_mean.hpp"
#include "bgclust/rng.hpp"
#include "test_util.hpp"

using namespace bgclust;
using testutil::thrown_message;

TEST_CASE("worked values") {
    const std::vector<double> y{1.0, 3.0};
    CHECK(power_mean(y, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(power_mean(y, -1.0) == doctest::Approx(1.5).epsilon(1e-12));

    const std::vector<double> c{4.0, 4.0, 4.0};
    for (double s : {1.0, 0.5, -0.2, -1.0, -7.0, -20.0}) {
        CHECK(power_mean(c, s) == doctest::Approx(4.0).epsilon(1e-9));
    }
}

TEST_CASE("s = 1 gradient is uniform") {
    const std::vector<double> y{2.0, 5.0, 11.0};
    const std::vector<double> g = power_mean_grad(y, 1.0);
    for (double v : g) CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("gradient is symmetric on constant vectors") {
    const std::vector<double> y{3.0, 3.0, 3.0, 3.0};
    const std::vector<double> g = power_mean_grad(y, -2.5);
    for (double v : g) CHECK(v == doctest::Approx(g[0]).epsilon(1e-12));
}

TEST_CASE("gradient matches central finite differences") {
    Rng rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = 2 + static_cast<std::size_t>(rng.uniform01() * 5.0);
        std::vector<double> y(k);
        for (auto& v : y) v = rng.uniform(0.5, 4.0);
        const double s = rng.uniform(-5.0, -0.1);

        const std::vector<double> g = power_mean_grad(y, s);
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<double> hi = y, lo = y;
            const double h = 1e-5 * std::max(1.0, std::abs(y[j]));
            hi[j] += h;
            lo[j] -= h;
            const double fd = (power_mean(hi, s) - power_mean(lo, s)) / (2.0 * h);
            CHECK(std::abs(g[j] - fd) <= 1e-5 * std::max(std::abs(g[j]), 1e-9));
        }
    }
}

TEST_CASE("the mean is monotone in s") {
    Rng rng(778);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> y(4);
        for (auto& v : y) v = rng.uniform(0.2, 9.0);
        double s_prev = -25.0;
        double m_prev = power_mean(y, s_prev);
        // Pairs straddle the log-space switchover near -5.
        for (double s : {-8.0, -4.0, -1.0, -0.3, 1.0}) {
            const double m = power_mean(y, s);
            CHECK(m >= m_prev - 1e-9);
            m_prev = m;
            s_prev = s;
        }
    }
}

TEST_CASE("evaluation is continuous across the log-space switchover") {
    const std::vector<double> y{2.0, 3.0, 0.7};
    const double below = power_mean(y, -5.0001);
    const double above = power_mean(y, -4.9999);
    CHECK(std::abs(below - above) < 1e-4);
}

TEST_CASE("positive homogeneity") {
    Rng rng(779);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> y(3), y2(3);
        for (std::size_t j = 0; j < 3; ++j) {
            y[j] = rng.uniform(0.1, 5.0);
            y2[j] = 3.5 * y[j];
        }
        for (double s : {0.7, -0.4, -3.0, -12.0}) {
            CHECK(power_mean(y2, s) ==
                  doctest::Approx(3.5 * power_mean(y, s)).epsilon(1e-9));
        }
    }
}

TEST_CASE("strongly negative exponents approach the minimum") {
    Rng rng(780);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> y(2);
        for (auto& v : y) v = rng.uniform(1.0, 30.0);
        const double lo = *std::min_element(y.begin(), y.end());
        const double m = power_mean(y, -20.0);
        CHECK(m >= lo - 1e-12);
        CHECK(std::abs(m - lo) <= 0.05 * lo);
    }
    // For longer vectors the exact envelope is min <= M <= min * k^(1/20).
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> y(4);
        for (auto& v : y) v = rng.uniform(1.0, 30.0);
        const double lo = *std::min_element(y.begin(), y.end());
        const double m = power_mean(y, -20.0);
        CHECK(m >= lo - 1e-12);
        CHECK(m <= lo * std::pow(4.0, 1.0 / 20.0) + 1e-9);
    }
}

TEST_CASE("mean sits between min and max") {
    Rng rng(781);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> y(5);
        for (auto& v : y) v = rng.uniform(0.01, 100.0);
        const double s = rng.uniform01() < 0.5 ? rng.uniform(-30.0, -0.01)
                                               : rng.uniform(0.01, 3.0);
        const double m = power_mean(y, s);
        CHECK(m >= *std::min_element(y.begin(), y.end()) - 1e-9);
        CHECK(m <= *std::max_element(y.begin(), y.end()) + 1e-9);
    }
}

TEST_CASE("domain validation") {
    const std::vector<double> y{1.0, 2.0};
    CHECK(thrown_message<std::invalid_argument>([&] { (void)power_mean(y, 0.0); }) != "");
    CHECK(thrown_message<std::invalid_argument>(
              [] { (void)power_mean(std::vector<double>{}, -1.0); }) != "");
    CHECK(thrown_message<std::invalid_argument>(
              [] { (void)power_mean(std::vector<double>{-0.5, 1.0}, -1.0); }) != "");
    CHECK(thrown_message<std::invalid_argument>(
              [] { (void)power_mean_grad(std::vector<double>{0.0, 1.0}, -1.0); }) != "");
    // Zero entries are fine for the mean itself (clamped), just not the gradient.
    CHECK(power_mean(std::vector<double>{0.0, 1.0}, -2.0) >= 0.0);
    CHECK(power_mean(std::vector<double>{0.0, 1.0}, -2.0) < 1e-100);
}

TEST_CASE("equal distances get equal weights") {
    const WeightMatrix w = mm_weights({1.0, 1.0}, 1, 2, -1.0);
    CHECK(w.at(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w.at(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("weight ratios follow (d2/d1)^(1-s)") {
    const WeightMatrix w = mm_weights({1.0, 4.0}, 1, 2, -1.0);
    // Harmonic mean of (1,4) is 1.6; weights (1.6/d)^2.
    CHECK(w.at(0, 0) == doctest::Approx(2.56).epsilon(1e-12));
    CHECK(w.at(0, 1) == doctest::Approx(0.16).epsilon(1e-12));
    CHECK(w.at(0, 0) / w.at(0, 1) == doctest::Approx(16.0).epsilon(1e-12));

    const WeightMatrix sharp = mm_weights({1.0, 4.0}, 1, 2, -20.0);
    CHECK(sharp.at(0, 0) / sharp.at(0, 1) > 1e9);
}

TEST_CASE("every weight row has a maximum of at least one") {
    Rng rng(782);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 5, k = 3;
        std::vector<double> d(n * k);
        for (auto& v : d) v = rng.uniform(0.01, 40.0);
        const double s = rng.uniform(-20.0, -0.1);
        const WeightMatrix w = mm_weights(d, n, k, s);
        for (std::size_t i = 0; i < n; ++i) {
            double row_max = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
                CHECK(std::isfinite(w.at(i, j)));
                CHECK(w.at(i, j) >= 0.0);
                row_max = std::max(row_max, w.at(i, j));
            }
            CHECK(row_max >= 1.0 - 1e-9);
        }
    }
}

TEST_CASE("a zero distance dominates its row") {
    const WeightMatrix w = mm_weights({0.0, 2.0}, 1, 2, -0.5);
    CHECK(std::isfinite(w.at(0, 0)));
    CHECK(std::isfinite(w.at(0, 1)));
    CHECK(w.at(0, 0) >= 1.0 - 1e-12);
    CHECK(w.at(0, 1) < 1e-12);  // near-indicator on the coincident centroid
}

TEST_CASE("an all-zero distance row falls back to equal weights") {
    const WeightMatrix w = mm_weights({0.0, 0.0, 0.0}, 1, 3, -1.5);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(std::isfinite(w.at(0, j)));
        CHECK(w.at(0, j) == doctest::Approx(w.at(0, 0)).epsilon(1e-12));
    }
    CHECK(w.at(0, 0) >= 1.0 - 1e-9);
}

TEST_CASE("weight validation") {
    CHECK(thrown_message<std::invalid_argument>(
              [] { (void)mm_weights({1.0, 2.0, 3.0}, 2, 2, -1.0); }) != "");
    CHECK(thrown_message<std::invalid_argument>(
              [] { (void)mm_weights({1.0, -2.0}, 1, 2, -1.0); }) != "");
    CHECK(thrown_message<std::invalid_argument>(
              [] { (void)mm_weights({1.0, 2.0}, 1, 2, 0.0); }) != "");
}
