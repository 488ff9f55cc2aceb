#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bgclust/clustering.hpp"
#include "bgclust/data.hpp"
#include "bgclust/gravity.hpp"

namespace bgclust {

// The (eta, K, d) candidate grid. By default eta is coupled to the other two:
// eta = eta0 - K*d*delta_eta, giving exactly 100 candidates for the 1..10
// ranges; candidates with eta <= 0 are enumerated but infeasible. The
// decoupled mode instead sweeps eta over {1/eta_steps, 2/eta_steps, ..., 1},
// largest first, independently for every (K, d) pair.
struct SearchGrid {
    double eta0 = 1.0;
    double delta_eta = 0.01;
    int k_min = 1, k_max = 10;
    int d_min = 1, d_max = 10;
    int delta_k = 1, delta_d = 1;
    bool decoupled_eta = false;
    int eta_steps = 10;  // decoupled mode only
};

struct ParamCandidate {
    double eta = 0.0;
    std::size_t K = 0;
    std::size_t d = 0;
    double objective = 0.0;
    bool feasible = false;
    std::string rejection_reason;
};

// Provenance of the reference centroids used by the scoring objective.
struct CentroidSource {
    std::string family;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    double objective = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

struct SearchOptions {
    // Reference centroids per candidate are fit on that candidate's improved
    // data (default). When theta_on_raw is set they are fit once on the input
    // data and shared across candidates.
    bool theta_on_raw = false;
    std::size_t threads = 1;
    std::size_t bpk_restarts = 1;
    // Outer refinement: after applying the best candidate, search again from
    // the improved data, until the objective stops decreasing (relative tol)
    // or max_passes is reached. max_passes = 1 gives the single-pass search.
    std::size_t max_passes = 10;
    double pass_tol = 1e-6;
    ForceMode force_mode = ForceMode::proportional;
};

struct PassRecord {
    std::size_t pass = 0;           // 1-based
    ParamCandidate best;            // winner of this pass's grid
    std::vector<ParamCandidate> candidates;  // full grid, enumeration order
};

struct SearchResult {
    ParamCandidate best;        // winner of the last applied pass
    DataMatrix improved_data;   // data after all applied passes
    std::vector<ParamCandidate> all_candidates;  // grid of the last applied pass
    std::vector<PassRecord> passes;              // every pass, applied or not
    std::size_t applied_passes = 0;
    double baseline_objective = 0.0;  // objective of the unimproved input
    CentroidSource centroid_source;   // reference centroids of the winning pass
};

// Full candidate list in enumeration order (K ascending, then d ascending,
// then eta descending in decoupled mode).
std::vector<ParamCandidate> enumerate_grid(const SearchGrid& grid);

// Improve `data` with the candidate's parameters, fit reference centroids
// (unless fixed_theta is supplied), and score with the summed Euclidean
// distance of every improved point to its nearest reference centroid.
// Guard violations and domain errors mark the candidate infeasible.
ParamCandidate score_candidate(const DataMatrix& data, ParamCandidate candidate,
                               std::size_t k, const DivergenceFamily& family,
                               std::uint64_t seed, const SearchOptions& options,
                               const CentroidSet* fixed_theta = nullptr);

// Lowest objective wins; objectives within 1e-12 are tied and resolved by
// smaller K, then smaller d, then larger eta. Returns nullptr when no
// candidate is feasible.
const ParamCandidate* pick_best(const std::vector<ParamCandidate>& candidates);

// The full data-driven search (grid enumeration, per-candidate improvement
// and scoring, winner application, and outer refinement passes).
SearchResult search(const DataMatrix& data, const SearchGrid& grid, std::size_t k,
                    const DivergenceFamily& family, std::uint64_t seed,
                    const SearchOptions& options = {});

}  // namespace bgclust
