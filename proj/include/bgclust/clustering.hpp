#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bgclust/data.hpp"
#include "bgclust/divergence.hpp"
#include "bgclust/power_mean.hpp"

namespace bgclust {

struct CentroidSet {
    std::size_t k = 0;
    std::size_t dims = 0;
    std::vector<double> values;  // row-major, k * dims
    double power_s = 0.0;        // final annealed exponent (power methods only)

    double at(std::size_t j, std::size_t d) const { return values[j * dims + d]; }
    double& at(std::size_t j, std::size_t d) { return values[j * dims + d]; }
    std::span<const double> row(std::size_t j) const {
        return {values.data() + j * dims, dims};
    }
};

// kmeans        hard assignment, squared Euclidean (family forced)
// bregman_hard  hard assignment, configured divergence
// kmeans_power  annealed power-mean objective, squared Euclidean (forced)
// bregman_power annealed power-mean objective, configured divergence
enum class Method { kmeans, bregman_hard, kmeans_power, bregman_power };

Method method_from_name(const std::string& name);
const char* to_string(Method method);

struct ClusterConfig {
    Method method = Method::kmeans;
    DivergenceFamily family;
    std::size_t k = 2;
    PowerMeanConfig power;
    std::size_t max_iters = 100;
    double tol = 1e-6;
    std::uint64_t seed = 0;
    std::size_t restarts = 1;
};

struct ClusterResult {
    std::vector<int> assignments;
    CentroidSet centroids;
    double objective = 0.0;       // method objective (power methods: soft, at final s)
    double hard_objective = 0.0;  // sum of min divergences at the final centroids
    std::size_t iterations = 0;
    bool converged = false;
};

// Uniform draw per coordinate from the data's bounding box; positive-support
// families get coordinates clamped above the domain epsilon.
CentroidSet init_centroids(const DataMatrix& data, std::size_t k, std::uint64_t seed,
                           const DivergenceFamily& family = {});

// Minimum-divergence assignment, ties to the lowest centroid index.
std::vector<int> assign(const DataMatrix& data, const CentroidSet& centroids,
                        const DivergenceFamily& family);

// One hard-clustering step: assign, then move each centroid to the arithmetic
// mean of its members (the exact minimizer for every Bregman divergence).
// Empty clusters are re-seeded at the point farthest from its nearest
// centroid. Never increases the hard objective.
CentroidSet lloyd_step(const DataMatrix& data, const CentroidSet& centroids,
                       const DivergenceFamily& family);

// One majorize-minimize step of the annealed power-mean objective at fixed
// s < 0: weights from mm_weights on the divergence matrix, then weighted
// arithmetic means. Underflowed (all-zero-weight) centroids are re-seeded
// like empty clusters. Never increases the soft objective at this s.
CentroidSet bpk_step(const DataMatrix& data, const CentroidSet& centroids,
                     const DivergenceFamily& family, double s);

// sum_i min_j d(x_i, theta_j)
double hard_objective_value(const DataMatrix& data, const CentroidSet& centroids,
                            const DivergenceFamily& family);

// sum_i M_s(d(x_i, theta_1), ..., d(x_i, theta_k))
double power_objective_value(const DataMatrix& data, const CentroidSet& centroids,
                             const DivergenceFamily& family, double s);

// Full fit: restarts over seeded inits, iterate the method's step until the
// relative objective change drops below tol or max_iters is hit. Power
// methods anneal s toward s_min between iterations. The returned result is
// the restart with the lowest objective (first wins ties).
ClusterResult fit(const DataMatrix& data, const ClusterConfig& config);

}  // namespace bgclust
