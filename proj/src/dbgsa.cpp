#include "bgclust/dbgsa.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bgclust/parallel.hpp"
#include "bgclust/rng.hpp"

namespace bgclust {

namespace {

// Summed (unsquared) Euclidean distance of every point to its nearest
// reference centroid.
double centroid_objective(const DataMatrix& data, const CentroidSet& theta) {
    double acc = 0.0;
    for (std::size_t i = 0; i < data.rows; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < theta.k; ++j) {
            double ss = 0.0;
            for (std::size_t c = 0; c < data.cols; ++c) {
                const double diff = data.at(i, c) - theta.at(j, c);
                ss += diff * diff;
            }
            best = std::min(best, ss);
        }
        acc += std::sqrt(best);
    }
    return acc;
}

ClusterConfig reference_fit_config(std::size_t k, const DivergenceFamily& family,
                                   std::uint64_t seed, std::size_t restarts) {
    ClusterConfig cfg;
    cfg.method = Method::bregman_power;
    cfg.family = family;
    cfg.k = k;
    cfg.seed = seed;
    cfg.restarts = restarts == 0 ? 1 : restarts;
    return cfg;
}

}  // namespace

std::vector<ParamCandidate> enumerate_grid(const SearchGrid& grid) {
    if (grid.k_min < 1 || grid.k_max < grid.k_min || grid.d_min < 1 ||
        grid.d_max < grid.d_min || grid.delta_k < 1 || grid.delta_d < 1) {
        throw std::invalid_argument("enumerate_grid: malformed ranges");
    }
    if (grid.decoupled_eta && grid.eta_steps < 1) {
        throw std::invalid_argument("enumerate_grid: eta_steps must be >= 1");
    }
    std::vector<ParamCandidate> out;
    for (int K = grid.k_min; K <= grid.k_max; K += grid.delta_k) {
        for (int d = grid.d_min; d <= grid.d_max; d += grid.delta_d) {
            if (grid.decoupled_eta) {
                // eta sweeps (0, 1] in eta_steps equal steps, largest first.
                for (int t = grid.eta_steps; t >= 1; --t) {
                    ParamCandidate c;
                    c.eta = static_cast<double>(t) / static_cast<double>(grid.eta_steps);
                    c.K = static_cast<std::size_t>(K);
                    c.d = static_cast<std::size_t>(d);
                    out.push_back(c);
                }
            } else {
                ParamCandidate c;
                c.eta = grid.eta0 - static_cast<double>(K) * static_cast<double>(d) *
                                        grid.delta_eta;
                c.K = static_cast<std::size_t>(K);
                c.d = static_cast<std::size_t>(d);
                out.push_back(c);
            }
        }
    }
    return out;
}

ParamCandidate score_candidate(const DataMatrix& data, ParamCandidate candidate,
                               std::size_t k, const DivergenceFamily& family,
                               std::uint64_t seed, const SearchOptions& options,
                               const CentroidSet* fixed_theta) {
    candidate.feasible = false;
    candidate.objective = std::numeric_limits<double>::quiet_NaN();
    if (!(candidate.eta > 0.0)) {
        candidate.rejection_reason = "eta <= 0";
        return candidate;
    }
    GravityConfig gc;
    gc.eta = candidate.eta;
    gc.K = candidate.K;
    gc.d = candidate.d;
    gc.force_mode = options.force_mode;

    DataMatrix improved;
    try {
        improved = improve(data, gc);
    } catch (const GuardViolation& e) {
        candidate.rejection_reason = e.what();
        return candidate;
    } catch (const std::invalid_argument& e) {
        candidate.rejection_reason = std::string("invalid configuration: ") + e.what();
        return candidate;
    }

    try {
        if (fixed_theta != nullptr) {
            candidate.objective = centroid_objective(improved, *fixed_theta);
        } else {
            const ClusterResult ref =
                fit(improved, reference_fit_config(k, family, seed, options.bpk_restarts));
            candidate.objective = centroid_objective(improved, ref.centroids);
        }
    } catch (const std::exception& e) {
        // Typically a domain error: the improvement pushed a positive-support
        // family out of its domain. The candidate is infeasible, not fatal.
        candidate.rejection_reason = std::string("scoring failed: ") + e.what();
        return candidate;
    }
    candidate.feasible = true;
    return candidate;
}

const ParamCandidate* pick_best(const std::vector<ParamCandidate>& candidates) {
    const ParamCandidate* best = nullptr;
    for (const auto& c : candidates) {
        if (!c.feasible) continue;
        if (best == nullptr) {
            best = &c;
            continue;
        }
        const double diff = c.objective - best->objective;
        bool wins = false;
        if (diff < -1e-12) {
            wins = true;
        } else if (diff <= 1e-12) {
            // Tie: smaller K, then smaller d, then larger eta.
            if (c.K != best->K) {
                wins = c.K < best->K;
            } else if (c.d != best->d) {
                wins = c.d < best->d;
            } else if (c.eta != best->eta) {
                wins = c.eta > best->eta;
            }
        }
        if (wins) best = &c;
    }
    return best;
}

SearchResult search(const DataMatrix& data, const SearchGrid& grid, std::size_t k,
                    const DivergenceFamily& family, std::uint64_t seed,
                    const SearchOptions& options) {
    if (k == 0 || k > data.rows) {
        throw std::invalid_argument("search: need 1 <= k <= n");
    }
    if (options.max_passes == 0) {
        throw std::invalid_argument("search: max_passes must be >= 1");
    }

    SearchResult result;

    // Reference centroids for the unimproved input; they give the baseline
    // objective and, in theta_on_raw mode, the shared scoring centroids.
    const std::uint64_t base_seed = mix_seed(seed, 0xBA5Eu);
    const ClusterResult base_fit =
        fit(data, reference_fit_config(k, family, base_seed, options.bpk_restarts));
    result.baseline_objective = centroid_objective(data, base_fit.centroids);
    result.centroid_source = {family.name(), k,        base_seed,
                              base_fit.objective, base_fit.iterations, base_fit.converged};

    DataMatrix cur = data;
    double prev_objective = result.baseline_objective;
    std::size_t infeasible_total = 0;
    std::string sample_reason;

    for (std::size_t pass = 1; pass <= options.max_passes; ++pass) {
        std::vector<ParamCandidate> candidates = enumerate_grid(grid);
        parallel_for(candidates.size(), options.threads, [&](std::size_t idx) {
            const std::uint64_t cand_seed = mix_seed(seed, pass, idx);
            candidates[idx] = score_candidate(
                cur, candidates[idx], k, family, cand_seed, options,
                options.theta_on_raw ? &base_fit.centroids : nullptr);
        });

        const ParamCandidate* best = pick_best(candidates);
        PassRecord record;
        record.pass = pass;
        record.candidates = candidates;
        if (best != nullptr) record.best = *best;
        result.passes.push_back(record);

        if (best == nullptr) {
            for (const auto& c : candidates) {
                if (!c.feasible) {
                    ++infeasible_total;
                    if (sample_reason.empty()) sample_reason = c.rejection_reason;
                }
            }
            if (pass == 1) {
                throw DataError("search: all " + std::to_string(candidates.size()) +
                                " candidates infeasible (e.g. " + sample_reason + ")");
            }
            break;
        }

        const std::size_t best_idx =
            static_cast<std::size_t>(best - candidates.data());

        if (result.applied_passes == 0 && pass == 1) {
            // Always report the first pass's winner even if it cannot beat
            // the baseline.
            result.best = *best;
            result.all_candidates = candidates;
        }

        const double scale = std::max(std::abs(prev_objective), 1e-30);
        if ((prev_objective - best->objective) / scale <= options.pass_tol) {
            break;  // no longer decreasing: keep the data from previous passes
        }

        GravityConfig gc;
        gc.eta = best->eta;
        gc.K = best->K;
        gc.d = best->d;
        gc.force_mode = options.force_mode;
        cur = improve(cur, gc);
        prev_objective = best->objective;
        ++result.applied_passes;
        result.best = *best;
        result.all_candidates = candidates;

        if (!options.theta_on_raw) {
            // Reproduce the winner's reference fit for the provenance record.
            const std::uint64_t win_seed = mix_seed(seed, pass, best_idx);
            const ClusterResult win_fit =
                fit(cur, reference_fit_config(k, family, win_seed, options.bpk_restarts));
            result.centroid_source = {family.name(),     k,
                                      win_seed,          win_fit.objective,
                                      win_fit.iterations, win_fit.converged};
        }
    }

    result.improved_data = std::move(cur);
    return result;
}

}  // namespace bgclust
