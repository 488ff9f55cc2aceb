#include "bgclust/power_mean.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bgclust {

namespace {

constexpr double kZeroClamp = 1e-300;

// Exponent below which the direct pow/sum evaluation starts losing digits;
// log-sum-exp is used from here on.
constexpr double kLogSpaceThreshold = -5.0;

void check_s(double s) {
    if (s == 0.0) {
        throw std::invalid_argument("power mean is undefined at s = 0");
    }
    if (!std::isfinite(s)) {
        throw std::invalid_argument("power mean exponent must be finite");
    }
}

// log((1/k) sum exp(a_i)) with the usual max shift.
double log_mean_exp(const std::vector<double>& a) {
    const double amax = *std::max_element(a.begin(), a.end());
    double acc = 0.0;
    for (double v : a) acc += std::exp(v - amax);
    return amax + std::log(acc / static_cast<double>(a.size()));
}

}  // namespace

double power_mean(std::span<const double> y, double s) {
    check_s(s);
    if (y.empty()) {
        throw std::invalid_argument("power mean of an empty vector");
    }
    for (double v : y) {
        if (!(v >= 0.0)) {
            throw std::invalid_argument("power mean requires nonnegative entries, got " +
                                        std::to_string(v));
        }
    }
    if (s >= kLogSpaceThreshold) {
        double acc = 0.0;
        for (double v : y) {
            acc += std::pow(s < 0.0 ? std::max(v, kZeroClamp) : v, s);
        }
        return std::pow(acc / static_cast<double>(y.size()), 1.0 / s);
    }
    std::vector<double> a(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        a[i] = s * std::log(std::max(y[i], kZeroClamp));
    }
    return std::exp(log_mean_exp(a) / s);
}

std::vector<double> power_mean_grad(std::span<const double> y, double s) {
    check_s(s);
    if (y.empty()) {
        throw std::invalid_argument("power mean gradient of an empty vector");
    }
    std::vector<double> logy(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(y[i] > 0.0)) {
            throw std::invalid_argument(
                "power mean gradient requires strictly positive entries, got " +
                std::to_string(y[i]));
        }
        logy[i] = std::log(y[i]);
    }
    // Uniform log-space evaluation:
    //   g_j = exp((1/s - 1) * log((1/k) sum y^s) + (s - 1) log y_j - log k).
    std::vector<double> a(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) a[i] = s * logy[i];
    const double log_mean_pow = log_mean_exp(a);
    const double logk = std::log(static_cast<double>(y.size()));
    std::vector<double> g(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
        g[j] = std::exp((1.0 / s - 1.0) * log_mean_pow + (s - 1.0) * logy[j] - logk);
    }
    return g;
}

WeightMatrix mm_weights(const std::vector<double>& distances, std::size_t n, std::size_t k,
                        double s) {
    check_s(s);
    if (k == 0 || n == 0 || distances.size() != n * k) {
        throw std::invalid_argument("mm_weights: distance matrix shape mismatch");
    }
    WeightMatrix w;
    w.rows = n;
    w.cols = k;
    w.values.resize(n * k);

    std::vector<double> logd(k);
    std::vector<double> a(k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const double d = distances[i * k + j];
            if (!(d >= -1e-9)) {
                throw std::invalid_argument("mm_weights: negative distance " +
                                            std::to_string(d) + " in row " + std::to_string(i));
            }
            logd[j] = std::log(std::max(d, kZeroClamp));
            a[j] = s * logd[j];
        }
        const double log_m = log_mean_exp(a) / s;  // log M_s(d_i.)
        for (std::size_t j = 0; j < k; ++j) {
            w.values[i * k + j] = std::exp((s - 1.0) * (logd[j] - log_m));
        }
    }
    return w;
}

}  // namespace bgclust
