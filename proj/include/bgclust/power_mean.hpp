#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bgclust {

// Annealing schedule for the power-mean exponent: s starts at s0 < 0 and is
// multiplied by anneal_factor > 1 each iteration until it reaches s_min, so
// the soft objective approaches the hard min-distance objective.
struct PowerMeanConfig {
    double s0 = -0.2;
    double anneal_factor = 1.05;
    double s_min = -20.0;
};

// M_s(y) = ((1/k) sum y_i^s)^(1/s). Requires s != 0 and y_i >= 0; strongly
// negative exponents are evaluated in log space, with zero entries clamped to
// 1e-300 when s < 0. Tends to min(y) as s -> -inf.
double power_mean(std::span<const double> y, double s);

// dM_s/dy_j = ((1/k) sum y_i^s)^(1/s - 1) * (1/k) y_j^(s-1); requires all
// y_j > 0.
std::vector<double> power_mean_grad(std::span<const double> y, double s);

struct WeightMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;  // row-major

    double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
};

// Majorization weights for the surrogate objective: w_ij scales the tangent
// of M_s at the current distances,
//     w_ij = (M_s(d_i.) / d_ij)^(1 - s),
// computed as exp((s - 1)(log d_ij - log M_i)) for stability. Each row's
// maximum is >= 1 because M_s(d_i.) >= min_j d_ij. Zero (or sub-1e-300)
// distances are clamped to 1e-300, which turns the row into a near-indicator
// on the coincident centroid -- the correct limit.
WeightMatrix mm_weights(const std::vector<double>& distances, std::size_t n,
                        std::size_t k, double s);

}  // namespace bgclust
