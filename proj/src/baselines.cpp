#include "bgclust/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace bgclust {

namespace {

std::vector<double> pairwise_euclidean(const DataMatrix& data) {
    const std::size_t n = data.rows;
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t c = 0; c < data.cols; ++c) {
                const double diff = data.at(i, c) - data.at(j, c);
                acc += diff * diff;
            }
            const double v = std::sqrt(acc);
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    }
    return d;
}

// Relabel cluster ids to 0..k-1 in order of first appearance and build the
// shared result struct (centroids = Euclidean means, squared-Euclidean
// objective).
ClusterResult finish_result(const DataMatrix& data, std::vector<int> raw, std::size_t k,
                            std::size_t iterations) {
    std::vector<int> remap;
    std::vector<int> assignments(data.rows, -1);
    std::vector<int> seen(data.rows, -1);
    int next = 0;
    for (std::size_t i = 0; i < data.rows; ++i) {
        const int r = raw[i];
        if (seen[static_cast<std::size_t>(r)] < 0) {
            seen[static_cast<std::size_t>(r)] = next++;
        }
        assignments[i] = seen[static_cast<std::size_t>(r)];
    }

    ClusterResult result;
    result.assignments = assignments;
    result.centroids.k = k;
    result.centroids.dims = data.cols;
    result.centroids.values.assign(k * data.cols, 0.0);
    std::vector<std::size_t> count(k, 0);
    for (std::size_t i = 0; i < data.rows; ++i) {
        const auto j = static_cast<std::size_t>(assignments[i]);
        ++count[j];
        for (std::size_t c = 0; c < data.cols; ++c) {
            result.centroids.at(j, c) += data.at(i, c);
        }
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (count[j] > 0) {
            for (std::size_t c = 0; c < data.cols; ++c) {
                result.centroids.at(j, c) /= static_cast<double>(count[j]);
            }
        }
    }
    const DivergenceFamily sq{DivKind::squared_euclidean, 1.0};
    result.objective = hard_objective_value(data, result.centroids, sq);
    result.hard_objective = result.objective;
    result.iterations = iterations;
    result.converged = true;
    return result;
}

}  // namespace

ClusterResult agglomerative(const DataMatrix& data, std::size_t k) {
    const std::size_t n = data.rows;
    if (k == 0 || k > n) {
        throw std::invalid_argument("agglomerative: need 1 <= k <= n");
    }
    std::vector<double> dist = pairwise_euclidean(data);
    std::vector<bool> active(n, true);
    std::vector<std::size_t> size(n, 1);
    std::vector<int> cluster(n);
    std::iota(cluster.begin(), cluster.end(), 0);

    std::size_t remaining = n;
    std::size_t merges = 0;
    while (remaining > k) {
        // Closest active pair; ties to the smallest (i, j).
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!active[j]) continue;
                if (dist[i * n + j] < best) {
                    best = dist[i * n + j];
                    bi = i;
                    bj = j;
                }
            }
        }
        // Lance-Williams average-linkage update into slot bi.
        const double wi = static_cast<double>(size[bi]);
        const double wj = static_cast<double>(size[bj]);
        for (std::size_t t = 0; t < n; ++t) {
            if (!active[t] || t == bi || t == bj) continue;
            const double merged =
                (wi * dist[bi * n + t] + wj * dist[bj * n + t]) / (wi + wj);
            dist[bi * n + t] = merged;
            dist[t * n + bi] = merged;
        }
        active[bj] = false;
        size[bi] += size[bj];
        for (std::size_t t = 0; t < n; ++t) {
            if (cluster[t] == static_cast<int>(bj)) cluster[t] = static_cast<int>(bi);
        }
        --remaining;
        ++merges;
    }
    return finish_result(data, std::move(cluster), k, merges);
}

ClusterResult density_peak(const DataMatrix& data, const PeakConfig& config) {
    const std::size_t n = data.rows;
    const std::size_t k = config.k;
    if (k == 0 || k > n) {
        throw std::invalid_argument("density_peak: need 1 <= k <= n");
    }
    if (!(config.dc_percentile > 0.0) || !(config.dc_percentile <= 1.0)) {
        throw std::invalid_argument("density_peak: dc_percentile must lie in (0, 1]");
    }
    const std::vector<double> dist = pairwise_euclidean(data);

    // d_c = requested quantile of the n*(n-1)/2 pairwise distances.
    std::vector<double> flat;
    flat.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) flat.push_back(dist[i * n + j]);
    }
    if (flat.empty() || *std::max_element(flat.begin(), flat.end()) <= 0.0) {
        throw std::invalid_argument("density_peak: all pairwise distances are zero");
    }
    std::sort(flat.begin(), flat.end());
    std::size_t qi = static_cast<std::size_t>(
        std::ceil(config.dc_percentile * static_cast<double>(flat.size())));
    qi = std::min(std::max<std::size_t>(qi, 1), flat.size());
    const double dc = flat[qi - 1];

    std::vector<std::size_t> rho(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && dist[i * n + j] < dc) ++rho[i];
        }
    }

    // Density order: rho descending, index ascending (a total order).
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&rho](std::size_t a, std::size_t b) {
        if (rho[a] != rho[b]) return rho[a] > rho[b];
        return a < b;
    });

    std::vector<double> delta(n, 0.0);
    std::vector<std::ptrdiff_t> parent(n, -1);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t i = order[pos];
        if (pos == 0) {
            delta[i] = *std::max_element(dist.begin() + static_cast<std::ptrdiff_t>(i * n),
                                         dist.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
            continue;
        }
        double best = std::numeric_limits<double>::infinity();
        std::size_t arg = order[0];
        for (std::size_t q = 0; q < pos; ++q) {
            const std::size_t j = order[q];
            if (dist[i * n + j] < best) {
                best = dist[i * n + j];
                arg = j;
            }
        }
        delta[i] = best;
        parent[i] = static_cast<std::ptrdiff_t>(arg);
    }

    // Centers: top-k by gamma = rho * delta, ties to the lower index.
    std::vector<std::size_t> by_gamma(n);
    std::iota(by_gamma.begin(), by_gamma.end(), 0);
    std::sort(by_gamma.begin(), by_gamma.end(), [&](std::size_t a, std::size_t b) {
        const double ga = static_cast<double>(rho[a]) * delta[a];
        const double gb = static_cast<double>(rho[b]) * delta[b];
        if (ga != gb) return ga > gb;
        return a < b;
    });

    std::vector<int> cluster(n, -1);
    for (std::size_t c = 0; c < k; ++c) {
        cluster[by_gamma[c]] = static_cast<int>(c);
    }
    // Assign in density order so every parent is labeled first.
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t i = order[pos];
        if (cluster[i] >= 0) continue;
        cluster[i] = parent[i] >= 0 ? cluster[static_cast<std::size_t>(parent[i])] : 0;
    }
    return finish_result(data, std::move(cluster), k, 1);
}

}  // namespace bgclust
