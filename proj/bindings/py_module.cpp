// Python bindings for the clustering core: numpy matrices in, numpy arrays
// and plain dicts out. The heavy lifting stays in the C++ library; this layer
// only converts containers and keyword arguments.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "bgclust/baselines.hpp"
#include "bgclust/clustering.hpp"
#include "bgclust/data.hpp"
#include "bgclust/dbgsa.hpp"
#include "bgclust/divergence.hpp"
#include "bgclust/generate.hpp"
#include "bgclust/gravity.hpp"
#include "bgclust/harness.hpp"
#include "bgclust/metrics.hpp"
#include "bgclust/power_mean.hpp"
#include "bgclust/preprocess.hpp"

namespace py = pybind11;
using namespace bgclust;

namespace {

using Array2D = py::array_t<double, py::array::c_style | py::array::forcecast>;
using Array1D = py::array_t<double, py::array::c_style | py::array::forcecast>;
using IntArray = py::array_t<long, py::array::c_style | py::array::forcecast>;

DataMatrix matrix_from_array(const Array2D& array, const char* what) {
    if (array.ndim() != 2) {
        throw std::invalid_argument(std::string(what) + " must be a 2-D array");
    }
    DataMatrix m = make_matrix(static_cast<std::size_t>(array.shape(0)),
                               static_cast<std::size_t>(array.shape(1)), what);
    std::memcpy(m.values.data(), array.data(), m.values.size() * sizeof(double));
    return m;
}

py::array_t<double> array_from_matrix(const DataMatrix& m) {
    py::array_t<double> out({m.rows, m.cols});
    std::memcpy(out.mutable_data(), m.values.data(), m.values.size() * sizeof(double));
    return out;
}

std::vector<double> vector_from_array(const Array1D& array, const char* what) {
    if (array.ndim() != 1) {
        throw std::invalid_argument(std::string(what) + " must be a 1-D array");
    }
    return std::vector<double>(array.data(), array.data() + array.shape(0));
}

std::vector<int> ints_from_array(const IntArray& array, const char* what) {
    if (array.ndim() != 1) {
        throw std::invalid_argument(std::string(what) + " must be a 1-D array");
    }
    std::vector<int> out(static_cast<std::size_t>(array.shape(0)));
    for (py::ssize_t i = 0; i < array.shape(0); ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(array.data()[i]);
    }
    return out;
}

py::array_t<int> array_from_ints(const std::vector<int>& v) {
    return py::array_t<int>({static_cast<py::ssize_t>(v.size())}, v.data());
}

py::array_t<double> array_from_centroids(const CentroidSet& c) {
    py::array_t<double> out({c.k, c.dims});
    std::memcpy(out.mutable_data(), c.values.data(), c.values.size() * sizeof(double));
    return out;
}

py::dict dict_from_cluster_result(const ClusterResult& result) {
    py::dict out;
    out["assignments"] = array_from_ints(result.assignments);
    out["centroids"] = array_from_centroids(result.centroids);
    out["objective"] = result.objective;
    out["hard_objective"] = result.hard_objective;
    out["iterations"] = result.iterations;
    out["converged"] = result.converged;
    out["power_s"] = result.centroids.power_s;
    return out;
}

py::dict dict_from_candidate(const ParamCandidate& c) {
    py::dict out;
    out["eta"] = c.eta;
    out["K"] = c.K;
    out["d"] = c.d;
    out["objective"] = c.objective;
    out["feasible"] = c.feasible;
    out["reason"] = c.rejection_reason;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() =
        "Bregman power clustering with data-gravitation improvement: divergences, "
        "power-mean clustering, neighbor-contraction improvement, parameter search, "
        "baselines, and partition metrics.";
    mod.attr("__version__") = "0.1.0";

    mod.def(
        "generate",
        [](const std::string& family, const std::vector<std::vector<double>>& centers,
           std::size_t samples_per_center, double noise_scale, std::uint64_t seed,
           int binomial_trials, double gamma_shape) {
            GeneratorSpec spec;
            spec.family = gen_family_from_name(family);
            spec.centers = centers;
            spec.samples_per_center = samples_per_center;
            spec.noise_scale = noise_scale;
            spec.seed = seed;
            spec.binomial_trials = binomial_trials;
            spec.gamma_shape = gamma_shape;
            const DataMatrix data = generate(spec);
            return py::make_tuple(array_from_matrix(data), array_from_ints(data.labels));
        },
        py::arg("family"), py::arg("centers"), py::arg("samples_per_center") = 99,
        py::arg("noise_scale") = 0.5, py::arg("seed") = 1729,
        py::arg("binomial_trials") = 100, py::arg("gamma_shape") = 15.0,
        "Draw a labeled synthetic mixture; returns (X, labels).");

    mod.def(
        "preprocess",
        [](const Array2D& data, const std::string& spec) {
            return array_from_matrix(
                preprocess(matrix_from_array(data, "data"), preprocess_spec_from_name(spec)));
        },
        py::arg("data"), py::arg("spec"),
        "Apply 'standardize', 'normalize', or 'pca:<dims>' to the columns.");

    mod.def(
        "bregman",
        [](const Array1D& x, const Array1D& y, const std::string& family, double alpha) {
            DivergenceFamily f = DivergenceFamily::from_name(family);
            f.alpha = alpha;
            return bregman(f, vector_from_array(x, "x"), vector_from_array(y, "y"));
        },
        py::arg("x"), py::arg("y"), py::arg("family") = "gaussian", py::arg("alpha") = 1.0,
        "Divergence from x to y under the named family.");

    mod.def(
        "power_mean",
        [](const Array1D& y, double s) { return power_mean(vector_from_array(y, "y"), s); },
        py::arg("y"), py::arg("s"), "Power mean of nonnegative values at exponent s.");

    mod.def(
        "cluster",
        [](const Array2D& data, std::size_t k, const std::string& method,
           const std::string& family, std::uint64_t seed, std::size_t restarts,
           std::size_t max_iters, double tol, double s0, double anneal_factor, double s_min,
           double alpha) {
            ClusterConfig config;
            config.method = method_from_name(method);
            config.family = DivergenceFamily::from_name(family);
            config.family.alpha = alpha;
            config.k = k;
            config.power = {s0, anneal_factor, s_min};
            config.max_iters = max_iters;
            config.tol = tol;
            config.seed = seed;
            config.restarts = restarts;
            return dict_from_cluster_result(fit(matrix_from_array(data, "data"), config));
        },
        py::arg("data"), py::arg("k"), py::arg("method") = "kmeans",
        py::arg("family") = "gaussian", py::arg("seed") = 1729, py::arg("restarts") = 1,
        py::arg("max_iters") = 100, py::arg("tol") = 1e-6, py::arg("s0") = -0.2,
        py::arg("anneal_factor") = 1.05, py::arg("s_min") = -20.0, py::arg("alpha") = 1.0,
        "Fit kmeans / bregman_hard / kmeans_power / bregman_power.");

    mod.def(
        "improve",
        [](const Array2D& data, double eta, std::size_t neighbors, std::size_t iterations,
           const std::string& force_mode) {
            GravityConfig config;
            config.eta = eta;
            config.K = neighbors;
            config.d = iterations;
            config.force_mode = force_mode_from_name(force_mode);
            return array_from_matrix(improve(matrix_from_array(data, "data"), config));
        },
        py::arg("data"), py::arg("eta") = 1.0, py::arg("neighbors") = 1,
        py::arg("iterations") = 1, py::arg("force_mode") = "proportional",
        "Contract each point toward its nearest neighbors.");

    mod.def(
        "dbgsa_search",
        [](const Array2D& data, std::size_t k, const std::string& family, std::uint64_t seed,
           double eta0, double delta_eta, bool decoupled_eta, int eta_steps,
           bool theta_on_raw, std::size_t threads, std::size_t bpk_restarts,
           std::size_t max_passes, double pass_tol, const std::string& force_mode) {
            SearchGrid grid;
            grid.eta0 = eta0;
            grid.delta_eta = delta_eta;
            grid.decoupled_eta = decoupled_eta;
            grid.eta_steps = eta_steps;
            SearchOptions options;
            options.theta_on_raw = theta_on_raw;
            options.threads = threads;
            options.bpk_restarts = bpk_restarts;
            options.max_passes = max_passes;
            options.pass_tol = pass_tol;
            options.force_mode = force_mode_from_name(force_mode);
            const SearchResult result =
                search(matrix_from_array(data, "data"), grid, k,
                       DivergenceFamily::from_name(family), seed, options);
            py::dict out;
            out["best"] = dict_from_candidate(result.best);
            out["improved"] = array_from_matrix(result.improved_data);
            out["baseline_objective"] = result.baseline_objective;
            out["applied_passes"] = result.applied_passes;
            py::list candidates;
            for (const ParamCandidate& c : result.all_candidates) {
                candidates.append(dict_from_candidate(c));
            }
            out["candidates"] = candidates;
            return out;
        },
        py::arg("data"), py::arg("k"), py::arg("family") = "gaussian",
        py::arg("seed") = 1729, py::arg("eta0") = 1.0, py::arg("delta_eta") = 0.01,
        py::arg("decoupled_eta") = false, py::arg("eta_steps") = 10,
        py::arg("theta_on_raw") = false, py::arg("threads") = 1,
        py::arg("bpk_restarts") = 1, py::arg("max_passes") = 10, py::arg("pass_tol") = 1e-6,
        py::arg("force_mode") = "proportional",
        "Grid-search (eta, K, d) and return the improved data with the winner.");

    mod.def(
        "agglomerative",
        [](const Array2D& data, std::size_t k) {
            return dict_from_cluster_result(agglomerative(matrix_from_array(data, "data"), k));
        },
        py::arg("data"), py::arg("k"), "Greedy average-linkage agglomeration.");

    mod.def(
        "density_peak",
        [](const Array2D& data, std::size_t k, double dc_percentile) {
            PeakConfig config;
            config.k = k;
            config.dc_percentile = dc_percentile;
            return dict_from_cluster_result(density_peak(matrix_from_array(data, "data"), config));
        },
        py::arg("data"), py::arg("k"), py::arg("dc_percentile") = 0.02,
        "Density-peak clustering with centers at high rho * delta.");

    mod.def(
        "ari",
        [](const IntArray& truth, const IntArray& pred) {
            return ari(ints_from_array(truth, "truth"), ints_from_array(pred, "pred"));
        },
        py::arg("truth"), py::arg("pred"), "Adjusted Rand index.");

    mod.def(
        "nmi",
        [](const IntArray& truth, const IntArray& pred) {
            return nmi(ints_from_array(truth, "truth"), ints_from_array(pred, "pred"));
        },
        py::arg("truth"), py::arg("pred"), "Normalized mutual information.");

    mod.def(
        "load_csv",
        [](const std::string& path, const std::optional<std::string>& label_column) {
            const DataMatrix data = load_csv(path, label_column);
            return py::make_tuple(array_from_matrix(data), array_from_ints(data.labels),
                                  data.name);
        },
        py::arg("path"), py::arg("label_column") = std::nullopt,
        "Load a CSV; returns (X, labels, name) with labels empty when no column given.");
}
