#pragma once

#include <span>

namespace bgclust {

// Adjusted Rand index via pair counting on the contingency table, in [-1, 1].
// Degenerate marginals (expected index equal to maximum index) return 1 when
// the partitions are identical up to relabeling and 0 otherwise.
double ari(std::span<const int> truth, std::span<const int> pred);

// Normalized mutual information I(U;V) / ((H(U) + H(V)) / 2) with natural
// logs, in [0, 1]. Both entropies zero -> 1; exactly one zero -> 0.
double nmi(std::span<const int> truth, std::span<const int> pred);

struct MetricReport {
    double ari = 0.0;
    double nmi = 0.0;
    std::size_t n = 0;
};

MetricReport evaluate(std::span<const int> truth, std::span<const int> pred);

}  // namespace bgclust
