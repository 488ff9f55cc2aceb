#include "bgclust/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace bgclust {

namespace {

// Relabel to dense ids in order of first appearance.
std::vector<int> dense_labels(std::span<const int> v, std::size_t& classes) {
    std::map<int, int> seen;
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto [it, inserted] = seen.emplace(v[i], static_cast<int>(seen.size()));
        out[i] = it->second;
    }
    classes = seen.size();
    return out;
}

struct Contingency {
    std::size_t r = 0, c = 0;
    std::vector<long long> cell;  // r * c
    std::vector<long long> row_sum, col_sum;
    long long n = 0;
};

Contingency contingency(std::span<const int> truth, std::span<const int> pred) {
    if (truth.size() != pred.size()) {
        throw std::invalid_argument("metric inputs differ in length");
    }
    if (truth.empty()) {
        throw std::invalid_argument("metric inputs must be non-empty");
    }
    Contingency t;
    const std::vector<int> u = dense_labels(truth, t.r);
    const std::vector<int> v = dense_labels(pred, t.c);
    t.cell.assign(t.r * t.c, 0);
    t.row_sum.assign(t.r, 0);
    t.col_sum.assign(t.c, 0);
    t.n = static_cast<long long>(truth.size());
    for (std::size_t i = 0; i < truth.size(); ++i) {
        ++t.cell[static_cast<std::size_t>(u[i]) * t.c + static_cast<std::size_t>(v[i])];
        ++t.row_sum[static_cast<std::size_t>(u[i])];
        ++t.col_sum[static_cast<std::size_t>(v[i])];
    }
    return t;
}

double choose2(long long m) { return 0.5 * static_cast<double>(m) * static_cast<double>(m - 1); }

bool same_partition(std::span<const int> a, std::span<const int> b) {
    std::size_t ca = 0, cb = 0;
    const std::vector<int> da = dense_labels(a, ca);
    const std::vector<int> db = dense_labels(b, cb);
    return da == db;
}

}  // namespace

double ari(std::span<const int> truth, std::span<const int> pred) {
    const Contingency t = contingency(truth, pred);
    if (t.n < 2) {
        throw std::invalid_argument("ari needs at least two points");
    }
    double index = 0.0;
    for (long long cell : t.cell) index += choose2(cell);
    double sum_rows = 0.0, sum_cols = 0.0;
    for (long long m : t.row_sum) sum_rows += choose2(m);
    for (long long m : t.col_sum) sum_cols += choose2(m);
    const double total = choose2(t.n);
    // Multiply the Hubert-Arabie ratio through by the total pair count before
    // subtracting: every term is then an exactly representable (half-)integer
    // for any realistic n, and the one division at the end rounds correctly.
    const double numerator = total * index - sum_rows * sum_cols;
    const double denominator = total * 0.5 * (sum_rows + sum_cols) - sum_rows * sum_cols;
    if (denominator == 0.0) {
        // Both partitions are all-singletons or all-one-block; agreement is
        // all-or-nothing.
        return same_partition(truth, pred) ? 1.0 : 0.0;
    }
    return std::clamp(numerator / denominator, -1.0, 1.0);
}

double nmi(std::span<const int> truth, std::span<const int> pred) {
    const Contingency t = contingency(truth, pred);
    const double n = static_cast<double>(t.n);
    double hu = 0.0, hv = 0.0, mi = 0.0;
    for (long long m : t.row_sum) {
        if (m > 0) {
            const double p = static_cast<double>(m) / n;
            hu -= p * std::log(p);
        }
    }
    for (long long m : t.col_sum) {
        if (m > 0) {
            const double p = static_cast<double>(m) / n;
            hv -= p * std::log(p);
        }
    }
    for (std::size_t i = 0; i < t.r; ++i) {
        for (std::size_t j = 0; j < t.c; ++j) {
            const long long m = t.cell[i * t.c + j];
            if (m == 0) continue;
            const double pij = static_cast<double>(m) / n;
            const double pi = static_cast<double>(t.row_sum[i]) / n;
            const double pj = static_cast<double>(t.col_sum[j]) / n;
            mi += pij * std::log(pij / (pi * pj));
        }
    }
    const bool zu = hu <= 0.0, zv = hv <= 0.0;
    if (zu && zv) return 1.0;
    if (zu || zv) return 0.0;
    return std::clamp(mi / (0.5 * (hu + hv)), 0.0, 1.0);
}

MetricReport evaluate(std::span<const int> truth, std::span<const int> pred) {
    MetricReport r;
    r.ari = ari(truth, pred);
    r.nmi = nmi(truth, pred);
    r.n = truth.size();
    return r;
}

}  // namespace bgclust
