#include "bgclust/divergence.hpp"

#include <cmath>
#include <stdexcept>

namespace bgclust {

namespace {

void check_domain(const DivergenceFamily& family, std::span<const double> v,
                  const char* which) {
    if (!family.positive_support()) return;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > kDomainEpsilon)) {
            throw std::invalid_argument(std::string(family.name()) + " requires strictly positive " +
                                        which + " coordinates; got " + std::to_string(v[i]) +
                                        " at index " + std::to_string(i));
        }
    }
}

void check_sizes(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("divergence arguments differ in dimension: " +
                                    std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    }
    if (x.empty()) {
        throw std::invalid_argument("divergence arguments must be non-empty");
    }
}

}  // namespace

DivergenceFamily DivergenceFamily::from_name(const std::string& name) {
    if (name == "gaussian") return {DivKind::squared_euclidean, 1.0};
    if (name == "binomial") return {DivKind::binomial_kl, 1.0};
    if (name == "poisson") return {DivKind::poisson, 1.0};
    if (name == "gamma") return {DivKind::gamma, 1.0};
    throw std::invalid_argument("unknown divergence family: " + name +
                                " (expected gaussian|binomial|poisson|gamma)");
}

const char* DivergenceFamily::name() const {
    switch (kind) {
        case DivKind::squared_euclidean: return "squared_euclidean";
        case DivKind::binomial_kl: return "binomial_kl";
        case DivKind::poisson: return "poisson";
        case DivKind::gamma: return "gamma";
    }
    return "?";
}

double phi(const DivergenceFamily& family, std::span<const double> x) {
    if (x.empty()) {
        throw std::invalid_argument("phi argument must be non-empty");
    }
    if (family.alpha <= 0.0) {
        throw std::invalid_argument("divergence alpha must be positive");
    }
    check_domain(family, x, "x");
    double acc = 0.0;
    switch (family.kind) {
        case DivKind::squared_euclidean:
            for (double v : x) acc += v * v;
            break;
        case DivKind::binomial_kl:
            for (double v : x) acc += v * std::log(v);
            break;
        case DivKind::poisson:
            for (double v : x) acc += v * std::log(v) - v;
            break;
        case DivKind::gamma:
            for (double v : x) acc += family.alpha + family.alpha * std::log(family.alpha / v);
            break;
    }
    return acc;
}

std::vector<double> grad_phi(const DivergenceFamily& family, std::span<const double> y) {
    if (y.empty()) {
        throw std::invalid_argument("grad_phi argument must be non-empty");
    }
    if (family.alpha <= 0.0) {
        throw std::invalid_argument("divergence alpha must be positive");
    }
    check_domain(family, y, "y");
    std::vector<double> g(y.size());
    switch (family.kind) {
        case DivKind::squared_euclidean:
            for (std::size_t i = 0; i < y.size(); ++i) g[i] = 2.0 * y[i];
            break;
        case DivKind::binomial_kl:
            for (std::size_t i = 0; i < y.size(); ++i) g[i] = 1.0 + std::log(y[i]);
            break;
        case DivKind::poisson:
            for (std::size_t i = 0; i < y.size(); ++i) g[i] = std::log(y[i]);
            break;
        case DivKind::gamma:
            for (std::size_t i = 0; i < y.size(); ++i) g[i] = -family.alpha / y[i];
            break;
    }
    return g;
}

double bregman(const DivergenceFamily& family, std::span<const double> x,
               std::span<const double> y) {
    check_sizes(x, y);
    if (family.alpha <= 0.0) {
        throw std::invalid_argument("divergence alpha must be positive");
    }
    check_domain(family, x, "x");
    check_domain(family, y, "y");
    double acc = 0.0;
    switch (family.kind) {
        case DivKind::squared_euclidean:
            for (std::size_t i = 0; i < x.size(); ++i) {
                const double d = x[i] - y[i];
                acc += d * d;
            }
            break;
        case DivKind::binomial_kl:
        case DivKind::poisson:
            // Both families share the KL-style closed form per coordinate.
            for (std::size_t i = 0; i < x.size(); ++i) {
                acc += x[i] * std::log(x[i] / y[i]) - (x[i] - y[i]);
            }
            break;
        case DivKind::gamma:
            for (std::size_t i = 0; i < x.size(); ++i) {
                acc += (family.alpha / y[i]) * (y[i] * std::log(y[i] / x[i]) + x[i] - y[i]);
            }
            break;
    }
    // The divergence is nonnegative by convexity; rounding can leave a tiny
    // negative residue which downstream log-space code must not see.
    return acc < 0.0 ? 0.0 : acc;
}

double bregman_reference(const DivergenceFamily& family, std::span<const double> x,
                         std::span<const double> y) {
    check_sizes(x, y);
    const double px = phi(family, x);
    const double py = phi(family, y);
    const std::vector<double> g = grad_phi(family, y);
    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += g[i] * (x[i] - y[i]);
    return px - py - dot;
}

}  // namespace bgclust
