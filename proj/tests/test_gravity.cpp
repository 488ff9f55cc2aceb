#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "bgclust/gravity.hpp"
#include "bgclust/rng.hpp"
#include "test_util.hpp"

using namespace bgclust;
using testutil::contains;
using testutil::thrown_message;

namespace {

DataMatrix line(const std::vector<double>& xs) {
    DataMatrix m = make_matrix(xs.size(), 1);
    m.values = xs;
    return m;
}

// Mean position of point i's K nearest neighbors in `snapshot`.
std::vector<double> neighbor_mean(const DataMatrix& snapshot, const NeighborSet& ns,
                                  std::size_t i) {
    std::vector<double> mean(snapshot.cols, 0.0);
    for (std::size_t q = 0; q < ns.K; ++q) {
        const std::size_t j = ns.index(i, q);
        for (std::size_t c = 0; c < snapshot.cols; ++c) mean[c] += snapshot.at(j, c);
    }
    for (auto& v : mean) v /= static_cast<double>(ns.K);
    return mean;
}

double dist_to(const DataMatrix& m, std::size_t i, const std::vector<double>& p) {
    double acc = 0.0;
    for (std::size_t c = 0; c < m.cols; ++c) {
        const double d = m.at(i, c) - p[c];
        acc += d * d;
    }
    return std::sqrt(acc);
}

}  // namespace

TEST_CASE("nearest neighbors on the line {0,1,3}") {
    const NeighborSet ns = knn(line({0.0, 1.0, 3.0}), 1);
    CHECK(ns.index(0, 0) == 1);
    CHECK(ns.index(1, 0) == 0);
    CHECK(ns.index(2, 0) == 1);
    CHECK(ns.distance(0, 0) == doctest::Approx(1.0));
    CHECK(ns.distance(1, 0) == doctest::Approx(1.0));
    CHECK(ns.distance(2, 0) == doctest::Approx(2.0));
}

TEST_CASE("K = n-1 returns every other point") {
    const DataMatrix data = testutil::random_matrix(6, 2, 0.0, 4.0, 9);
    const NeighborSet ns = knn(data, 5);
    for (std::size_t i = 0; i < 6; ++i) {
        std::vector<bool> hit(6, false);
        for (std::size_t q = 0; q < 5; ++q) {
            const std::size_t j = ns.index(i, q);
            CHECK(j != i);  // self excluded
            hit[j] = true;
        }
        std::size_t hits = 0;
        for (bool h : hit) hits += h ? 1 : 0;
        CHECK(hits == 5);
        // Distances come out sorted ascending.
        for (std::size_t q = 1; q < 5; ++q) {
            CHECK(ns.distance(i, q) >= ns.distance(i, q - 1));
        }
    }
}

TEST_CASE("duplicate points are legal zero-distance neighbors") {
    const NeighborSet ns = knn(line({2.0, 2.0, 7.0}), 1);
    CHECK(ns.distance(0, 0) == 0.0);
    CHECK(ns.index(0, 0) == 1);
    CHECK(ns.distance(1, 0) == 0.0);
    CHECK(ns.index(1, 0) == 0);
}

TEST_CASE("knn validates K") {
    const DataMatrix data = line({0.0, 1.0});
    CHECK(thrown_message<std::invalid_argument>([&] { (void)knn(data, 0); }) != "");
    CHECK(thrown_message<std::invalid_argument>([&] { (void)knn(data, 2); }) != "");
}

TEST_CASE("the pull coefficient is the mean neighbor distance times exp(-alpha z/d)") {
    const NeighborSet ns = knn(line({0.0, 1.0}), 1);
    const std::vector<double> g = gravity_coefficient(ns, 1, 1, 1.0);
    CHECK(g[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(g[1] == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

    // Later iterations decay: z=2 of d=4 vs z=1 of d=4.
    const std::vector<double> g1 = gravity_coefficient(ns, 1, 4, 1.0);
    const std::vector<double> g2 = gravity_coefficient(ns, 2, 4, 1.0);
    CHECK(g2[0] < g1[0]);
    CHECK(g2[0] == doctest::Approx(g1[0] * std::exp(-0.25)).epsilon(1e-12));

    // Coincident points pull with zero strength.
    const NeighborSet dup = knn(line({3.0, 3.0}), 1);
    CHECK(gravity_coefficient(dup, 1, 1, 1.0)[0] == 0.0);

    CHECK(thrown_message<std::invalid_argument>(
              [&] { (void)gravity_coefficient(ns, 0, 1, 1.0); }) != "");
    CHECK(thrown_message<std::invalid_argument>(
              [&] { (void)gravity_coefficient(ns, 3, 2, 1.0); }) != "");
}

TEST_CASE("two points a unit apart close to a gap of 1 - 2/e") {
    for (ForceMode mode : {ForceMode::proportional, ForceMode::unit_scaled}) {
        GravityConfig cfg;
        cfg.eta = 1.0;
        cfg.K = 1;
        cfg.d = 1;
        cfg.force_mode = mode;
        const DataMatrix out = improve(line({0.0, 1.0}), cfg);
        CHECK(out.at(0, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
        CHECK(out.at(1, 0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
        const double gap = out.at(1, 0) - out.at(0, 0);
        CHECK(gap == doctest::Approx(1.0 - 2.0 * std::exp(-1.0)).epsilon(1e-12));
    }
}

TEST_CASE("a vanishing step leaves the data in place") {
    const DataMatrix data = testutil::random_matrix(12, 2, 0.0, 5.0, 33);
    GravityConfig cfg;
    cfg.eta = 1e-14;
    cfg.K = 2;
    cfg.d = 1;
    const DataMatrix out = improve(data, cfg);
    for (std::size_t i = 0; i < data.values.size(); ++i) {
        CHECK(std::abs(out.values[i] - data.values[i]) <= 1e-12);
    }
}

TEST_CASE("shape, labels, and names pass through") {
    DataMatrix data = testutil::blobs({{0.0, 0.0}, {8.0, 8.0}}, 10, 0.5, 71);
    data.name = "tagged";
    GravityConfig cfg;
    cfg.eta = 0.3;
    cfg.K = 2;
    cfg.d = 3;
    const DataMatrix out = improve(data, cfg);
    CHECK(out.rows == data.rows);
    CHECK(out.cols == data.cols);
    CHECK(out.labels == data.labels);
    CHECK(out.name == data.name);
}

TEST_CASE("improvement is bit-identical across runs") {
    const DataMatrix data = testutil::random_matrix(20, 3, 0.0, 6.0, 81);
    GravityConfig cfg;
    cfg.eta = 0.2;
    cfg.K = 3;
    cfg.d = 4;
    CHECK(improve(data, cfg).values == improve(data, cfg).values);
}

TEST_CASE("the proportional update contracts toward the frozen neighbor mean") {
    Rng rng(555);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 8 + static_cast<std::size_t>(rng.uniform01() * 20);
        const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform01() * 3);
        const DataMatrix data = testutil::random_matrix(n, m, -5.0, 5.0, rng.bits());
        const std::size_t K =
            1 + static_cast<std::size_t>(rng.uniform01() * std::min<std::size_t>(5, n - 2));

        const NeighborSet ns = knn(data, K);
        const std::vector<double> g = gravity_coefficient(ns, 1, 1, 1.0);
        double gmax = 0.0;
        for (double v : g) gmax = std::max(gmax, v);
        REQUIRE(gmax > 0.0);
        // Scale eta so the guard quantity eta*G*K peaks just under 2.
        const double eta = rng.uniform(0.05, 1.95) / (gmax * static_cast<double>(K));

        GravityConfig cfg;
        cfg.eta = eta;
        cfg.K = K;
        cfg.d = 1;
        cfg.force_mode = ForceMode::proportional;
        const DataMatrix out = improve(data, cfg);

        for (std::size_t i = 0; i < n; ++i) {
            const std::vector<double> mean = neighbor_mean(data, ns, i);
            const double before = dist_to(data, i, mean);
            const double after = dist_to(out, i, mean);
            CHECK(after <= before + 1e-9);
        }
    }
}

TEST_CASE("the unit-scaled update pulls nearly all blob points toward their neighbors") {
    const DataMatrix data = testutil::blobs({{0.0, 0.0}, {12.0, 0.0}}, 20, 1.0, 99);
    GravityConfig cfg;
    cfg.eta = 0.4;
    cfg.K = 3;
    cfg.d = 1;
    cfg.force_mode = ForceMode::unit_scaled;
    const NeighborSet ns = knn(data, cfg.K);
    const DataMatrix out = improve(data, cfg);

    std::size_t closer = 0;
    for (std::size_t i = 0; i < data.rows; ++i) {
        const std::vector<double> mean = neighbor_mean(data, ns, i);
        if (dist_to(out, i, mean) < dist_to(data, i, mean)) ++closer;
    }
    CHECK(static_cast<double>(closer) >= 0.95 * static_cast<double>(data.rows));
}

TEST_CASE("repeated application shrinks a blob's spread") {
    const DataMatrix data = testutil::blobs({{0.0, 0.0}}, 25, 1.0, 13);
    GravityConfig cfg;
    cfg.eta = 0.3;
    cfg.K = 3;
    cfg.d = 5;
    const DataMatrix out = improve(data, cfg);
    auto spread = [](const DataMatrix& m) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m.rows; ++i) {
            for (std::size_t c = 0; c < m.cols; ++c) acc += m.at(i, c) * m.at(i, c);
        }
        return acc;
    };
    // The generator centers the blob at the origin, toward which it contracts.
    CHECK(spread(out) < spread(data));
}

TEST_CASE("an oversized step trips the guard with full diagnostics") {
    const DataMatrix data = line({0.0, 10.0, 20.0});
    GravityConfig cfg;
    cfg.eta = 5.0;
    cfg.K = 1;
    cfg.d = 1;
    try {
        (void)improve(data, cfg);
        FAIL("expected the guard to trip");
    } catch (const GuardViolation& e) {
        CHECK(e.value() >= 2.0);
        CHECK(e.iteration() == 1);
        CHECK(contains(e.what(), "eta*G*K"));
        CHECK(contains(e.what(), ">= 2"));
        CHECK(contains(e.what(), "gravity guard violated at point"));
    }
}

TEST_CASE("improve validates its configuration") {
    const DataMatrix data = line({0.0, 1.0, 2.0});
    GravityConfig cfg;
    cfg.eta = 0.0;
    CHECK(thrown_message<std::invalid_argument>([&] { (void)improve(data, cfg); }) != "");
    cfg.eta = 0.5;
    cfg.K = 0;
    CHECK(thrown_message<std::invalid_argument>([&] { (void)improve(data, cfg); }) != "");
    cfg.K = 3;
    CHECK(thrown_message<std::invalid_argument>([&] { (void)improve(data, cfg); }) != "");
    cfg.K = 1;
    cfg.d = 0;
    CHECK(thrown_message<std::invalid_argument>([&] { (void)improve(data, cfg); }) != "");
}

TEST_CASE("force mode names round-trip") {
    CHECK(force_mode_from_name("proportional") == ForceMode::proportional);
    CHECK(force_mode_from_name("unit_scaled") == ForceMode::unit_scaled);
    CHECK(std::string(to_string(ForceMode::proportional)) == "proportional");
    CHECK(std::string(to_string(ForceMode::unit_scaled)) == "unit_scaled");
    CHECK(thrown_message<std::invalid_argument>(
              [] { (void)force_mode_from_name("inverse"); }) != "");
}
