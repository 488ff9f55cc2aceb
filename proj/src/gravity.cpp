#include "bgclust/gravity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bgclust {

GuardViolation::GuardViolation(std::size_t point, std::size_t iteration, double value)
    : std::runtime_error("gravity guard violated at point " + std::to_string(point) +
                         ", iteration " + std::to_string(iteration) +
                         ": eta*G*K = " + std::to_string(value) + " >= 2"),
      point_(point),
      iteration_(iteration),
      value_(value) {}

ForceMode force_mode_from_name(const std::string& name) {
    if (name == "proportional") return ForceMode::proportional;
    if (name == "unit_scaled") return ForceMode::unit_scaled;
    throw std::invalid_argument("unknown force mode: " + name +
                                " (expected proportional|unit_scaled)");
}

const char* to_string(ForceMode mode) {
    return mode == ForceMode::proportional ? "proportional" : "unit_scaled";
}

NeighborSet knn(const DataMatrix& data, std::size_t K) {
    const std::size_t n = data.rows;
    if (K == 0 || K >= n) {
        throw std::invalid_argument("knn: need 1 <= K < n (K=" + std::to_string(K) +
                                    ", n=" + std::to_string(n) + ")");
    }
    NeighborSet ns;
    ns.n = n;
    ns.K = K;
    ns.indices.resize(n * K);
    ns.distances.resize(n * K);

    std::vector<std::pair<double, std::size_t>> cand(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            double acc = 0.0;
            for (std::size_t c = 0; c < data.cols; ++c) {
                const double diff = data.at(i, c) - data.at(j, c);
                acc += diff * diff;
            }
            cand[w++] = {std::sqrt(acc), j};
        }
        std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(K),
                          cand.end());
        for (std::size_t q = 0; q < K; ++q) {
            ns.distances[i * K + q] = cand[q].first;
            ns.indices[i * K + q] = cand[q].second;
        }
    }
    return ns;
}

std::vector<double> gravity_coefficient(const NeighborSet& neighbors, std::size_t z,
                                        std::size_t d, double alpha) {
    if (z == 0 || d == 0 || z > d) {
        throw std::invalid_argument("gravity_coefficient: need 1 <= z <= d");
    }
    const double decay =
        std::exp(-alpha * static_cast<double>(z) / static_cast<double>(d));
    std::vector<double> g(neighbors.n, 0.0);
    for (std::size_t i = 0; i < neighbors.n; ++i) {
        double mean = 0.0;
        for (std::size_t q = 0; q < neighbors.K; ++q) {
            mean += neighbors.distance(i, q);
        }
        mean /= static_cast<double>(neighbors.K);
        g[i] = mean * decay;
    }
    return g;
}

DataMatrix improve(const DataMatrix& data, const GravityConfig& config) {
    if (!(config.eta > 0.0)) {
        throw std::invalid_argument("improve: eta must be positive");
    }
    if (config.d == 0) {
        throw std::invalid_argument("improve: d must be >= 1");
    }
    if (config.K == 0 || config.K >= data.rows) {
        throw std::invalid_argument("improve: need 1 <= K < n");
    }

    DataMatrix cur = data;
    DataMatrix next = data;
    const std::size_t n = data.rows;
    const std::size_t m = data.cols;
    const double kf = static_cast<double>(config.K);

    for (std::size_t z = 1; z <= config.d; ++z) {
        const NeighborSet ns = knn(cur, config.K);
        const std::vector<double> g = gravity_coefficient(ns, z, config.d, config.alpha);

        for (std::size_t i = 0; i < n; ++i) {
            const double step = config.eta * g[i] * kf;
            if (step >= 2.0) {
                throw GuardViolation(i, z, step);
            }
        }

        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> force(m, 0.0);
            const double d_first = ns.distance(i, 0);
            for (std::size_t q = 0; q < config.K; ++q) {
                const std::size_t j = ns.index(i, q);
                const double d_ij = ns.distance(i, q);
                if (config.force_mode == ForceMode::proportional) {
                    for (std::size_t c = 0; c < m; ++c) {
                        force[c] += cur.at(j, c) - cur.at(i, c);
                    }
                } else {
                    // Unit direction scaled by the nearest-neighbor distance;
                    // coincident neighbors contribute nothing.
                    if (d_ij <= 0.0) continue;
                    const double scale = d_first / d_ij;
                    for (std::size_t c = 0; c < m; ++c) {
                        force[c] += scale * (cur.at(j, c) - cur.at(i, c));
                    }
                }
            }
            for (std::size_t c = 0; c < m; ++c) {
                next.at(i, c) = cur.at(i, c) + config.eta * g[i] * force[c];
            }
        }
        std::swap(cur.values, next.values);
    }
    return cur;
}

}  // namespace bgclust
