#include "bgclust/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bgclust/rng.hpp"

namespace bgclust {

namespace {

DivergenceFamily effective_family(const ClusterConfig& config) {
    if (config.method == Method::kmeans || config.method == Method::kmeans_power) {
        return DivergenceFamily{DivKind::squared_euclidean, 1.0};
    }
    return config.family;
}

bool is_power_method(Method m) {
    return m == Method::kmeans_power || m == Method::bregman_power;
}

// n x k divergence matrix.
std::vector<double> divergence_matrix(const DataMatrix& data, const CentroidSet& c,
                                      const DivergenceFamily& family) {
    std::vector<double> d(data.rows * c.k);
    for (std::size_t i = 0; i < data.rows; ++i) {
        for (std::size_t j = 0; j < c.k; ++j) {
            d[i * c.k + j] = bregman(family, data.row(i), c.row(j));
        }
    }
    return d;
}

// Re-seed centroid `broken` at the point farthest (in divergence) from its
// nearest centroid, considering only centroids marked valid.
void reseed_centroid(const DataMatrix& data, CentroidSet& c, const DivergenceFamily& family,
                     std::size_t broken, const std::vector<bool>& valid) {
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < data.rows; ++i) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < c.k; ++j) {
            if (!valid[j]) continue;
            nearest = std::min(nearest, bregman(family, data.row(i), c.row(j)));
        }
        if (nearest > best) {
            best = nearest;
            arg = i;
        }
    }
    for (std::size_t d = 0; d < c.dims; ++d) c.at(broken, d) = data.at(arg, d);
}

double relative_change(double prev, double cur) {
    const double scale = std::max({std::abs(prev), std::abs(cur), 1e-30});
    return std::abs(prev - cur) / scale;
}

ClusterResult single_fit(const DataMatrix& data, const ClusterConfig& config,
                         std::uint64_t seed) {
    const DivergenceFamily family = effective_family(config);
    CentroidSet c = init_centroids(data, config.k, seed, family);
    const bool power = is_power_method(config.method);
    double s = config.power.s0;

    ClusterResult result;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t iter = 1; iter <= config.max_iters; ++iter) {
        c = power ? bpk_step(data, c, family, s) : lloyd_step(data, c, family);
        const double obj = power ? power_objective_value(data, c, family, s)
                                 : hard_objective_value(data, c, family);
        if (!std::isfinite(obj)) {
            throw std::runtime_error(std::string("non-finite objective at iteration ") +
                                     std::to_string(iter) + " (method " +
                                     to_string(config.method) + ", family " + family.name() +
                                     ")");
        }
        result.iterations = iter;
        if (iter > 1 && relative_change(prev, obj) < config.tol) {
            result.converged = true;
            result.objective = obj;
            break;
        }
        prev = obj;
        result.objective = obj;
        if (power) {
            s = std::max(config.power.s_min, s * config.power.anneal_factor);
        }
    }

    c.power_s = power ? s : 0.0;
    result.centroids = c;
    result.assignments = assign(data, c, family);
    result.hard_objective = hard_objective_value(data, c, family);
    return result;
}

}  // namespace

Method method_from_name(const std::string& name) {
    if (name == "kmeans") return Method::kmeans;
    if (name == "bregman_hard") return Method::bregman_hard;
    if (name == "kmeans_power") return Method::kmeans_power;
    if (name == "bregman_power") return Method::bregman_power;
    throw std::invalid_argument("unknown method: " + name +
                                " (expected kmeans|bregman_hard|kmeans_power|bregman_power)");
}

const char* to_string(Method method) {
    switch (method) {
        case Method::kmeans: return "kmeans";
        case Method::bregman_hard: return "bregman_hard";
        case Method::kmeans_power: return "kmeans_power";
        case Method::bregman_power: return "bregman_power";
    }
    return "?";
}

CentroidSet init_centroids(const DataMatrix& data, std::size_t k, std::uint64_t seed,
                           const DivergenceFamily& family) {
    if (k == 0) throw std::invalid_argument("init_centroids: k must be >= 1");
    if (data.rows == 0) throw std::invalid_argument("init_centroids: empty data");

    std::vector<double> lo(data.cols), hi(data.cols);
    for (std::size_t j = 0; j < data.cols; ++j) {
        lo[j] = hi[j] = data.at(0, j);
        for (std::size_t i = 1; i < data.rows; ++i) {
            lo[j] = std::min(lo[j], data.at(i, j));
            hi[j] = std::max(hi[j], data.at(i, j));
        }
    }

    CentroidSet c;
    c.k = k;
    c.dims = data.cols;
    c.values.resize(k * data.cols);
    Rng rng(seed);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t d = 0; d < data.cols; ++d) {
            double v = rng.uniform(lo[d], hi[d]);
            if (family.positive_support()) {
                v = std::max(v, 2.0 * kDomainEpsilon);
            }
            c.at(j, d) = v;
        }
    }
    return c;
}

std::vector<int> assign(const DataMatrix& data, const CentroidSet& centroids,
                        const DivergenceFamily& family) {
    std::vector<int> a(data.rows, 0);
    for (std::size_t i = 0; i < data.rows; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < centroids.k; ++j) {
            const double d = bregman(family, data.row(i), centroids.row(j));
            if (d < best) {
                best = d;
                a[i] = static_cast<int>(j);
            }
        }
    }
    return a;
}

CentroidSet lloyd_step(const DataMatrix& data, const CentroidSet& centroids,
                       const DivergenceFamily& family) {
    const std::vector<int> a = assign(data, centroids, family);
    CentroidSet next = centroids;
    std::vector<std::size_t> count(centroids.k, 0);
    std::fill(next.values.begin(), next.values.end(), 0.0);
    for (std::size_t i = 0; i < data.rows; ++i) {
        const auto j = static_cast<std::size_t>(a[i]);
        ++count[j];
        for (std::size_t d = 0; d < data.cols; ++d) next.at(j, d) += data.at(i, d);
    }
    std::vector<bool> valid(centroids.k, true);
    for (std::size_t j = 0; j < centroids.k; ++j) {
        if (count[j] == 0) {
            valid[j] = false;
            // keep old position until re-seeded below
            for (std::size_t d = 0; d < data.cols; ++d) next.at(j, d) = centroids.at(j, d);
        } else {
            for (std::size_t d = 0; d < data.cols; ++d) {
                next.at(j, d) /= static_cast<double>(count[j]);
            }
        }
    }
    for (std::size_t j = 0; j < centroids.k; ++j) {
        if (!valid[j]) {
            reseed_centroid(data, next, family, j, valid);
            valid[j] = true;
        }
    }
    return next;
}

CentroidSet bpk_step(const DataMatrix& data, const CentroidSet& centroids,
                     const DivergenceFamily& family, double s) {
    if (!(s < 0.0)) {
        throw std::invalid_argument("bpk_step requires s < 0");
    }
    const std::vector<double> dmat = divergence_matrix(data, centroids, family);
    const WeightMatrix w = mm_weights(dmat, data.rows, centroids.k, s);

    CentroidSet next = centroids;
    std::fill(next.values.begin(), next.values.end(), 0.0);
    std::vector<double> denom(centroids.k, 0.0);
    for (std::size_t i = 0; i < data.rows; ++i) {
        for (std::size_t j = 0; j < centroids.k; ++j) {
            const double wij = w.at(i, j);
            denom[j] += wij;
            for (std::size_t d = 0; d < data.cols; ++d) {
                next.at(j, d) += wij * data.at(i, d);
            }
        }
    }
    std::vector<bool> valid(centroids.k, true);
    for (std::size_t j = 0; j < centroids.k; ++j) {
        if (denom[j] > 0.0) {
            for (std::size_t d = 0; d < data.cols; ++d) {
                next.at(j, d) /= denom[j];
            }
        } else {
            valid[j] = false;
            for (std::size_t d = 0; d < data.cols; ++d) next.at(j, d) = centroids.at(j, d);
        }
    }
    for (std::size_t j = 0; j < centroids.k; ++j) {
        if (!valid[j]) {
            reseed_centroid(data, next, family, j, valid);
            valid[j] = true;
        }
    }
    return next;
}

double hard_objective_value(const DataMatrix& data, const CentroidSet& centroids,
                            const DivergenceFamily& family) {
    double acc = 0.0;
    for (std::size_t i = 0; i < data.rows; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < centroids.k; ++j) {
            best = std::min(best, bregman(family, data.row(i), centroids.row(j)));
        }
        acc += best;
    }
    return acc;
}

double power_objective_value(const DataMatrix& data, const CentroidSet& centroids,
                             const DivergenceFamily& family, double s) {
    double acc = 0.0;
    std::vector<double> row(centroids.k);
    for (std::size_t i = 0; i < data.rows; ++i) {
        for (std::size_t j = 0; j < centroids.k; ++j) {
            row[j] = bregman(family, data.row(i), centroids.row(j));
        }
        acc += power_mean(row, s);
    }
    return acc;
}

ClusterResult fit(const DataMatrix& data, const ClusterConfig& config) {
    if (config.k == 0) throw std::invalid_argument("fit: k must be >= 1");
    if (config.k > data.rows) {
        throw std::invalid_argument("fit: k exceeds the number of points");
    }
    if (config.restarts == 0) throw std::invalid_argument("fit: restarts must be >= 1");
    if (!(config.tol > 0.0)) throw std::invalid_argument("fit: tol must be positive");
    if (config.max_iters == 0) throw std::invalid_argument("fit: max_iters must be >= 1");
    if (is_power_method(config.method)) {
        if (!(config.power.s0 < 0.0)) {
            throw std::invalid_argument("fit: power methods need s0 < 0");
        }
        if (!(config.power.anneal_factor > 1.0)) {
            throw std::invalid_argument("fit: anneal_factor must exceed 1");
        }
        if (!(config.power.s_min <= config.power.s0)) {
            throw std::invalid_argument("fit: s_min must be <= s0");
        }
    }

    ClusterResult best;
    bool have = false;
    for (std::size_t r = 0; r < config.restarts; ++r) {
        const std::uint64_t seed = r == 0 ? config.seed : mix_seed(config.seed, r);
        ClusterResult cur = single_fit(data, config, seed);
        if (!have || cur.objective < best.objective) {
            best = std::move(cur);
            have = true;
        }
    }
    return best;
}

}  // namespace bgclust
