#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bgclust/data.hpp"
#include "bgclust/errors.hpp"

namespace bgclust {

// How the pull toward each of the K neighbors is scaled.
//   proportional  force term = (o_ij - x_i): pull proportional to the offset.
//                 The step-size analysis behind the eta*G*K < 2 guard holds
//                 exactly for this form (distance to the neighbor mean
//                 contracts by |1 - eta*G*K| per iteration), so it is the
//                 default used by the parameter search.
//   unit_scaled   force term = ||o_i1 - x_i|| * (o_ij - x_i) / ||o_ij - x_i||:
//                 a unit direction scaled by the nearest-neighbor distance.
enum class ForceMode { proportional, unit_scaled };

ForceMode force_mode_from_name(const std::string& name);
const char* to_string(ForceMode mode);

struct GravityConfig {
    double eta = 1.0;    // step scale
    std::size_t K = 1;   // neighbors per point
    std::size_t d = 1;   // iterations
    ForceMode force_mode = ForceMode::proportional;
    double alpha = 1.0;    // decay factor exponent scale, fixed at 1
    double epsilon = 0.01; // near-zero softening constant; carried in reports
                           // for the record but unused by the simplified update
};

// Exact brute-force K-nearest-neighbor sets under Euclidean distance, ties to
// the lower index. indices/distances are n x K row-major, sorted by
// (distance, index) ascending.
struct NeighborSet {
    std::size_t n = 0;
    std::size_t K = 0;
    std::vector<std::size_t> indices;
    std::vector<double> distances;

    std::size_t index(std::size_t i, std::size_t q) const { return indices[i * K + q]; }
    double distance(std::size_t i, std::size_t q) const { return distances[i * K + q]; }
};

NeighborSet knn(const DataMatrix& data, std::size_t K);

// Per-point gravity coefficient at iteration z of d:
//   G_i(z) = (mean distance to the K neighbors) * exp(-alpha * z / d).
std::vector<double> gravity_coefficient(const NeighborSet& neighbors, std::size_t z,
                                        std::size_t d, double alpha = 1.0);

// d iterations of the neighbor-attraction update
//   x_i <- x_i + eta * G_i(z) * sum_j force(i, j)
// with neighbors and G recomputed each iteration and all points moved
// simultaneously from the iteration-start snapshot. Throws GuardViolation the
// moment any point sees eta * G_i * K >= 2. Labels and shape pass through.
DataMatrix improve(const DataMatrix& data, const GravityConfig& config);

}  // namespace bgclust
