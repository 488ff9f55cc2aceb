#pragma once

#include <cstddef>

#include "bgclust/clustering.hpp"
#include "bgclust/data.hpp"

namespace bgclust {

// Greedy average-linkage agglomeration on Euclidean distance, merging the
// closest active pair (Lance-Williams update; ties to the lexicographically
// smallest index pair) until k clusters remain. Deterministic; centroids in
// the result are the Euclidean means of the final clusters.
ClusterResult agglomerative(const DataMatrix& data, std::size_t k);

struct PeakConfig {
    std::size_t k = 2;
    // Quantile of the pairwise-distance distribution used as the cutoff d_c
    // for the local density rho.
    double dc_percentile = 0.02;
};

// Density-peak clustering: rho_i counts the points within d_c; delta_i is the
// distance to the nearest point of higher density (density order is rho
// descending, index ascending; the global peak takes its maximum pairwise
// distance). Centers are the top-k by rho * delta; every other point joins
// the cluster of its nearest higher-density point, resolved in density order.
ClusterResult density_peak(const DataMatrix& data, const PeakConfig& config);

}  // namespace bgclust
