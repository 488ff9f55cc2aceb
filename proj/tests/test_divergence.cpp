#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "bgclust/divergence.hpp"
#include "bgclust/rng.hpp"
#include "test_util.hpp"

using namespace bgclust;
using testutil::thrown_message;

namespace {

const DivergenceFamily kSqEuclid{DivKind::squared_euclidean, 1.0};
const DivergenceFamily kBinomial{DivKind::binomial_kl, 1.0};
const DivergenceFamily kPoisson{DivKind::poisson, 1.0};
const DivergenceFamily kGamma{DivKind::gamma, 1.0};

const std::vector<DivergenceFamily> kAll{kSqEuclid, kBinomial, kPoisson, kGamma};

std::vector<double> random_point(Rng& rng, std::size_t dims, bool positive) {
    std::vector<double> x(dims);
    for (auto& v : x) v = positive ? rng.uniform(0.1, 50.0) : rng.uniform(-10.0, 10.0);
    return x;
}

}  // namespace

TEST_CASE("generator function values") {
    CHECK(phi(kSqEuclid, std::vector<double>{3.0, 4.0}) == doctest::Approx(25.0));
    CHECK(phi(kPoisson, std::vector<double>{1.0}) == doctest::Approx(-1.0));
    CHECK(phi(kBinomial, std::vector<double>{1.0, 1.0}) == doctest::Approx(0.0));
}

TEST_CASE("divergence worked values") {
    CHECK(bregman(kSqEuclid, std::vector<double>{3.0, 0.0}, std::vector<double>{0.0, 4.0}) ==
          doctest::Approx(25.0).epsilon(1e-12));
    CHECK(bregman(kPoisson, std::vector<double>{2.0}, std::vector<double>{1.0}) ==
          doctest::Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-12));
    for (const auto& family : kAll) {
        const std::vector<double> p{2.0, 7.0};
        CHECK(bregman(family, p, p) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("generator gradients") {
    const std::vector<double> g1 = grad_phi(kSqEuclid, std::vector<double>{1.0, 2.0});
    CHECK(g1[0] == doctest::Approx(2.0));
    CHECK(g1[1] == doctest::Approx(4.0));

    const std::vector<double> g2 = grad_phi(kPoisson, std::vector<double>{1.0});
    CHECK(g2[0] == doctest::Approx(0.0));

    const std::vector<double> g3 = grad_phi(kGamma, std::vector<double>{2.0});
    CHECK(g3[0] == doctest::Approx(-0.5));
}

TEST_CASE("closed forms agree with the literal definition") {
    Rng rng(404);
    for (const auto& family : kAll) {
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t dims = 1 + static_cast<std::size_t>(rng.uniform01() * 4.0);
            const auto x = random_point(rng, dims, family.positive_support());
            const auto y = random_point(rng, dims, family.positive_support());
            const double closed = bregman(family, x, y);
            const double ref = bregman_reference(family, x, y);
            CHECK(std::abs(closed - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("divergences are nonnegative and vanish only near x == y") {
    Rng rng(405);
    for (const auto& family : kAll) {
        for (int trial = 0; trial < 500; ++trial) {
            const auto x = random_point(rng, 3, family.positive_support());
            auto y = random_point(rng, 3, family.positive_support());
            CHECK(bregman(family, x, y) >= 0.0);  // clamped closed form
            CHECK(bregman_reference(family, x, y) >= -1e-12);

            double linf = 0.0;
            for (std::size_t j = 0; j < 3; ++j) linf = std::max(linf, std::abs(x[j] - y[j]));
            if (linf > 1e-6) CHECK(bregman(family, x, y) > 0.0);
        }
    }
}

TEST_CASE("gradients match central finite differences of phi") {
    Rng rng(406);
    for (const auto& family : kAll) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto y = random_point(rng, 3, family.positive_support());
            const std::vector<double> g = grad_phi(family, y);
            for (std::size_t j = 0; j < y.size(); ++j) {
                std::vector<double> hi = y, lo = y;
                const double h = 1e-6 * std::max(1.0, std::abs(y[j]));
                hi[j] += h;
                lo[j] -= h;
                const double fd = (phi(family, hi) - phi(family, lo)) / (2.0 * h);
                CHECK(std::abs(g[j] - fd) <= 1e-5 * std::max(1.0, std::abs(g[j])));
            }
        }
    }
}

TEST_CASE("only the squared euclidean divergence is symmetric") {
    Rng rng(407);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = random_point(rng, 2, false);
        const auto y = random_point(rng, 2, false);
        CHECK(bregman(kSqEuclid, x, y) ==
              doctest::Approx(bregman(kSqEuclid, y, x)).epsilon(1e-9));
    }
    const std::vector<double> a{1.0}, b{4.0};
    for (const auto& family : {kBinomial, kPoisson, kGamma}) {
        CHECK(std::abs(bregman(family, a, b) - bregman(family, b, a)) > 1e-3);
    }
}

TEST_CASE("positive-support families reject out-of-domain points") {
    const std::vector<double> good{1.0}, zero{0.0}, tiny{1e-13}, negative{-1.0};
    for (const auto& family : {kBinomial, kPoisson, kGamma}) {
        for (const auto& bad : {zero, tiny, negative}) {
            CHECK(thrown_message<std::invalid_argument>(
                      [&] { (void)bregman(family, bad, good); }) != "");
            CHECK(thrown_message<std::invalid_argument>(
                      [&] { (void)bregman(family, good, bad); }) != "");
            CHECK(thrown_message<std::invalid_argument>([&] { (void)phi(family, bad); }) !=
                  "");
        }
    }
    // The squared euclidean family accepts anything finite.
    CHECK(bregman(kSqEuclid, negative, zero) == doctest::Approx(1.0));
}

TEST_CASE("mismatched dimensions are rejected") {
    CHECK(thrown_message<std::invalid_argument>([] {
              (void)bregman(kSqEuclid, std::vector<double>{1.0},
                            std::vector<double>{1.0, 2.0});
          }) != "");
}

TEST_CASE("gamma shape scales its divergence linearly") {
    const DivergenceFamily g2{DivKind::gamma, 2.0};
    const std::vector<double> x{3.0}, y{5.0};
    CHECK(bregman(g2, x, y) == doctest::Approx(2.0 * bregman(kGamma, x, y)).epsilon(1e-12));
}

TEST_CASE("family names round-trip") {
    CHECK(DivergenceFamily::from_name("gaussian").kind == DivKind::squared_euclidean);
    CHECK(DivergenceFamily::from_name("binomial").kind == DivKind::binomial_kl);
    CHECK(DivergenceFamily::from_name("poisson").kind == DivKind::poisson);
    CHECK(DivergenceFamily::from_name("gamma").kind == DivKind::gamma);
    CHECK(std::string(kGamma.name()) == "gamma");
    CHECK(std::string(kSqEuclid.name()) == "squared_euclidean");
    CHECK(thrown_message<std::invalid_argument>(
              [] { (void)DivergenceFamily::from_name("beta"); }) != "");
}
