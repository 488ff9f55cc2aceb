// bgclust: command-line front end for the clustering library. Every
// file-producing run also writes a key=value manifest so it can be replayed
// byte-for-byte; simulation-study and dbgsa accept --from-manifest directly.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bgclust/baselines.hpp"
#include "bgclust/clustering.hpp"
#include "bgclust/data.hpp"
#include "bgclust/dbgsa.hpp"
#include "bgclust/divergence.hpp"
#include "bgclust/errors.hpp"
#include "bgclust/generate.hpp"
#include "bgclust/gravity.hpp"
#include "bgclust/harness.hpp"
#include "bgclust/manifest.hpp"
#include "bgclust/metrics.hpp"
#include "bgclust/preprocess.hpp"

namespace {

using namespace bgclust;

std::optional<std::string> optional_name(const std::string& name) {
    if (name.empty()) return std::nullopt;
    return name;
}

DataMatrix load_input(const std::string& path, const std::string& label_column) {
    return load_csv(path, optional_name(label_column));
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
    std::string family = "gaussian";
    std::string centers = "10,10;20,20;40,40";
    std::size_t samples_per_center = 99;
    double noise_scale = 0.5;
    int binomial_trials = 100;
    double gamma_shape = 15.0;
    std::uint64_t seed = 1729;
    std::string out;
};

void run_generate(const GenerateArgs& args) {
    GeneratorSpec spec;
    spec.family = gen_family_from_name(args.family);
    spec.centers = centers_from_string(args.centers);
    spec.samples_per_center = args.samples_per_center;
    spec.noise_scale = args.noise_scale;
    spec.binomial_trials = args.binomial_trials;
    spec.gamma_shape = args.gamma_shape;
    spec.seed = args.seed;
    const DataMatrix data = generate(spec);
    write_csv(data, args.out);

    Manifest m;
    m.set("command", "generate");
    m.set("family", args.family);
    m.set("centers", args.centers);
    m.set("samples_per_center", static_cast<std::uint64_t>(args.samples_per_center));
    m.set("noise_scale", args.noise_scale);
    m.set("binomial_trials", args.binomial_trials);
    m.set("gamma_shape", args.gamma_shape);
    m.set("seed", args.seed);
    m.set("out", args.out);
    m.set("data_hash", content_hash(data));
    m.write(args.out + ".manifest.txt");
    std::cout << "wrote " << args.out << ": " << data.rows << " rows, " << data.cols
              << " features, " << spec.centers.size() << " clusters\n";
}

// ---------------------------------------------------------------------------

struct ImproveArgs {
    std::string data;
    std::string label_column;
    double eta = 1.0;
    std::size_t neighbors = 1;
    std::size_t iterations = 1;
    std::string force_mode = "proportional";
    std::string out;
};

void run_improve(const ImproveArgs& args) {
    const DataMatrix data = load_input(args.data, args.label_column);
    GravityConfig config;
    config.eta = args.eta;
    config.K = args.neighbors;
    config.d = args.iterations;
    config.force_mode = force_mode_from_name(args.force_mode);
    const DataMatrix improved = improve(data, config);
    write_csv(improved, args.out);

    Manifest m;
    m.set("command", "improve");
    m.set("data_path", args.data);
    m.set("data_hash", content_hash(data));
    m.set("label_column", args.label_column);
    m.set("eta", args.eta);
    m.set("neighbors", static_cast<std::uint64_t>(args.neighbors));
    m.set("iterations", static_cast<std::uint64_t>(args.iterations));
    m.set("force_mode", args.force_mode);
    m.set("alpha", config.alpha);
    m.set("epsilon", config.epsilon);
    m.set("out", args.out);
    m.set("improved_hash", content_hash(improved));
    m.write(args.out + ".manifest.txt");
    std::cout << "wrote " << args.out << ": " << improved.rows << " rows moved through "
              << args.iterations << " iterations\n";
}

// ---------------------------------------------------------------------------

struct ClusterArgs {
    std::string data;
    std::string label_column;
    std::string preprocess_name;
    std::string method = "kmeans";
    std::string family = "gaussian";
    std::size_t k = 2;
    std::uint64_t seed = 1729;
    std::size_t restarts = 1;
    std::size_t max_iters = 100;
    double tol = 1e-6;
    double s0 = -0.2;
    double anneal_factor = 1.05;
    double s_min = -20.0;
    std::string out;
};

void run_cluster(const ClusterArgs& args) {
    DataMatrix data = load_input(args.data, args.label_column);
    const std::uint64_t data_hash = content_hash(data);
    if (!args.preprocess_name.empty()) {
        data = preprocess(data, preprocess_spec_from_name(args.preprocess_name));
    }
    ClusterConfig config;
    config.method = method_from_name(args.method);
    config.family = DivergenceFamily::from_name(args.family);
    config.k = args.k;
    config.power = {args.s0, args.anneal_factor, args.s_min};
    config.max_iters = args.max_iters;
    config.tol = args.tol;
    config.seed = args.seed;
    config.restarts = args.restarts;
    const ClusterResult result = fit(data, config);

    Manifest m;
    m.set("command", "cluster");
    m.set("data_path", args.data);
    m.set("data_hash", data_hash);
    m.set("label_column", args.label_column);
    m.set("preprocess", args.preprocess_name);
    m.set("method", args.method);
    m.set("family", args.family);
    m.set("k", static_cast<std::uint64_t>(args.k));
    m.set("seed", args.seed);
    m.set("restarts", static_cast<std::uint64_t>(args.restarts));
    m.set("max_iters", static_cast<std::uint64_t>(args.max_iters));
    m.set("tol", args.tol);
    m.set("power_s0", args.s0);
    m.set("power_anneal_factor", args.anneal_factor);
    m.set("power_s_min", args.s_min);
    m.set("objective", result.objective);
    m.set("hard_objective", result.hard_objective);
    m.set("iterations", static_cast<std::uint64_t>(result.iterations));
    m.set("converged", result.converged);

    std::cout << "method=" << args.method << " family=" << args.family << " k=" << args.k
              << '\n';
    std::cout << "objective=" << format_double(result.objective) << '\n';
    std::cout << "hard_objective=" << format_double(result.hard_objective) << '\n';
    std::cout << "iterations=" << result.iterations << '\n';
    std::cout << "converged=" << (result.converged ? "true" : "false") << '\n';
    if (data.has_labels()) {
        const MetricReport metrics = evaluate(data.labels, result.assignments);
        m.set("ari", metrics.ari);
        m.set("nmi", metrics.nmi);
        std::cout << "ari=" << format_double(metrics.ari) << '\n';
        std::cout << "nmi=" << format_double(metrics.nmi) << '\n';
    }
    if (!args.out.empty()) {
        DataMatrix assignments = make_matrix(data.rows, 1, data.name + "_assignments");
        assignments.col_names = {"row"};
        assignments.labels = result.assignments;
        for (std::size_t i = 0; i < data.rows; ++i) {
            assignments.at(i, 0) = static_cast<double>(i);
        }
        write_csv(assignments, args.out);
        m.set("out", args.out);
        m.write(args.out + ".manifest.txt");
        std::cout << "wrote " << args.out << '\n';
    }
}

// ---------------------------------------------------------------------------

struct MetricsArgs {
    std::string truth;
    std::string truth_column = "label";
    std::string pred;
    std::string pred_column = "label";
};

void run_metrics(const MetricsArgs& args) {
    const DataMatrix truth = load_csv(args.truth, args.truth_column);
    const DataMatrix pred = load_csv(args.pred, args.pred_column);
    if (truth.labels.size() != pred.labels.size()) {
        throw DataError("label counts differ: " + args.truth + " has " +
                        std::to_string(truth.labels.size()) + ", " + args.pred + " has " +
                        std::to_string(pred.labels.size()));
    }
    const MetricReport report = evaluate(truth.labels, pred.labels);
    std::cout << "n=" << report.n << '\n';
    std::cout << "ari=" << format_double(report.ari) << '\n';
    std::cout << "nmi=" << format_double(report.nmi) << '\n';
}

// ---------------------------------------------------------------------------

struct DbgsaArgs {
    DbgsaRunConfig config;
    std::string from_manifest;
    std::string out_dir;
    bool threads_given = false;
};

void run_dbgsa_cmd(DbgsaArgs& args) {
    if (!args.from_manifest.empty()) {
        const std::size_t flag_threads = args.config.options.threads;
        args.config = dbgsa_config_from_manifest(Manifest::load(args.from_manifest));
        if (args.threads_given) args.config.options.threads = flag_threads;
    }
    const DbgsaRun run = run_dbgsa(args.config);
    write_dbgsa_outputs(run, args.out_dir);
    std::cout << "baseline_objective=" << format_double(run.result.baseline_objective) << '\n';
    std::cout << "best_eta=" << format_double(run.result.best.eta) << '\n';
    std::cout << "best_K=" << run.result.best.K << '\n';
    std::cout << "best_d=" << run.result.best.d << '\n';
    std::cout << "best_objective=" << format_double(run.result.best.objective) << '\n';
    std::cout << "applied_passes=" << run.result.applied_passes << '\n';
    std::cout << "wrote " << args.out_dir << "/improved.csv, candidates.csv, manifest.txt\n";
}

// ---------------------------------------------------------------------------

struct SimulationArgs {
    SimulationConfig config;
    std::string centers = "10,10;20,20;40,40";
    std::string from_manifest;
    std::string out_dir;
    bool threads_given = false;
};

void run_simulation_cmd(SimulationArgs& args) {
    if (!args.from_manifest.empty()) {
        const std::size_t flag_threads = args.config.threads;
        args.config = simulation_config_from_manifest(Manifest::load(args.from_manifest));
        if (args.threads_given) args.config.threads = flag_threads;
    } else {
        args.config.centers = centers_from_string(args.centers);
    }
    const SimulationResult result = run_simulation_study(args.config);
    write_simulation_outputs(result, args.out_dir);
    std::cout << result.table.to_text();
    std::cout << "wrote " << args.out_dir
              << "/simulation_table.csv, simulation_table.txt, simulation_raw.csv, "
                 "manifest.txt\n";
}

// ---------------------------------------------------------------------------

struct ImprovementArgs {
    ImprovementConfig config;
    std::string from_manifest;
    std::string out_dir;
    bool threads_given = false;
};

void run_improvement_cmd(ImprovementArgs& args) {
    if (!args.from_manifest.empty()) {
        const std::size_t flag_threads = args.config.threads;
        args.config = improvement_config_from_manifest(Manifest::load(args.from_manifest));
        if (args.threads_given) args.config.threads = flag_threads;
    }
    const ImprovementResult result = run_improvement_study(args.config);
    write_improvement_outputs(result, args.out_dir);
    std::cout << result.table.to_text();
    std::cout << '\n' << kReferenceCaption << "\n\n";
    std::cout << published_nmi_reference().to_text();
    std::cout << '\n' << published_increment_reference().to_text();
    std::cout << "wrote " << args.out_dir
              << "/improvement_table.csv, improvement_raw.csv, reference tables, "
                 "manifest.txt\n";
}

// ---------------------------------------------------------------------------

struct PlotdataArgs {
    std::string data;
    std::string label_column;
    std::string assignments;
    std::string assignments_column = "label";
    std::string out;
};

void run_plotdata(const PlotdataArgs& args) {
    const DataMatrix data = load_input(args.data, args.label_column);
    std::optional<std::vector<int>> assignments;
    if (!args.assignments.empty()) {
        assignments = load_csv(args.assignments, args.assignments_column).labels;
    }
    write_plotdata(data, assignments ? &*assignments : nullptr, args.out);

    Manifest m;
    m.set("command", "plotdata");
    m.set("data_path", args.data);
    m.set("data_hash", content_hash(data));
    m.set("label_column", args.label_column);
    m.set("assignments_path", args.assignments);
    m.set("out", args.out);
    m.write(args.out + ".manifest.txt");
    std::cout << "wrote " << args.out << ": " << data.rows << " rows\n";
}

// ---------------------------------------------------------------------------

void add_grid_flags(CLI::App* cmd, SearchGrid& grid) {
    cmd->add_option("--eta0", grid.eta0, "Coupled-grid starting step scale");
    cmd->add_option("--delta-eta", grid.delta_eta,
                    "Step-scale decrement (coupled) or step unit (decoupled)");
    cmd->add_option("--k-min", grid.k_min, "Smallest neighbor count");
    cmd->add_option("--k-max", grid.k_max, "Largest neighbor count");
    cmd->add_option("--d-min", grid.d_min, "Smallest iteration count");
    cmd->add_option("--d-max", grid.d_max, "Largest iteration count");
    cmd->add_option("--delta-k", grid.delta_k, "Neighbor-count stride");
    cmd->add_option("--delta-d", grid.delta_d, "Iteration-count stride");
    cmd->add_flag("--decoupled-eta", grid.decoupled_eta,
                  "Sweep eta independently of (K, d)");
    cmd->add_option("--eta-steps", grid.eta_steps, "Decoupled-eta step count");
}

void add_search_flags(CLI::App* cmd, SearchOptions& options, std::string& force_mode,
                      bool& threads_given) {
    cmd->add_flag("--theta-on-raw", options.theta_on_raw,
                  "Fit reference centroids once on the input data");
    cmd->add_option("--threads", options.threads, "Worker threads (0 = all cores)")
        ->each([&threads_given](const std::string&) { threads_given = true; });
    cmd->add_option("--bpk-restarts", options.bpk_restarts,
                    "Restarts for the reference-centroid fit");
    cmd->add_option("--max-passes", options.max_passes, "Refinement pass limit");
    cmd->add_option("--pass-tol", options.pass_tol,
                    "Relative objective improvement needed to keep refining");
    cmd->add_option("--force-mode", force_mode, "proportional | unit_scaled");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Bregman power clustering with data-gravitation improvement and a "
        "reproducible experiment harness"};
    app.require_subcommand(1);

    GenerateArgs generate_args;
    {
        CLI::App* cmd = app.add_subcommand("generate", "Draw a labeled synthetic mixture");
        cmd->add_option("--family", generate_args.family,
                        "gaussian | binomial | poisson | gamma");
        cmd->add_option("--centers", generate_args.centers,
                        "Cluster centers, e.g. 10,10;20,20;40,40");
        cmd->add_option("--samples-per-center", generate_args.samples_per_center,
                        "Points per cluster");
        cmd->add_option("--noise-scale", generate_args.noise_scale,
                        "Gaussian standard deviation");
        cmd->add_option("--binomial-trials", generate_args.binomial_trials,
                        "Trial count for binomial draws");
        cmd->add_option("--gamma-shape", generate_args.gamma_shape,
                        "Shape for gamma draws");
        cmd->add_option("--seed", generate_args.seed, "Random seed");
        cmd->add_option("--out", generate_args.out, "Output CSV path")->required();
        cmd->callback([&] { run_generate(generate_args); });
    }

    ImproveArgs improve_args;
    {
        CLI::App* cmd =
            app.add_subcommand("improve", "Contract each point toward its nearest neighbors");
        cmd->add_option("--data", improve_args.data, "Input CSV path")->required();
        cmd->add_option("--label-column", improve_args.label_column,
                        "Label column to carry through");
        cmd->add_option("--eta", improve_args.eta, "Step scale");
        cmd->add_option("--neighbors", improve_args.neighbors, "Neighbors per point (K)");
        cmd->add_option("--iterations", improve_args.iterations, "Update iterations (d)");
        cmd->add_option("--force-mode", improve_args.force_mode,
                        "proportional | unit_scaled");
        cmd->add_option("--out", improve_args.out, "Output CSV path")->required();
        cmd->callback([&] { run_improve(improve_args); });
    }

    ClusterArgs cluster_args;
    {
        CLI::App* cmd = app.add_subcommand("cluster", "Fit one clustering method");
        cmd->add_option("--data", cluster_args.data, "Input CSV path")->required();
        cmd->add_option("--label-column", cluster_args.label_column,
                        "Ground-truth labels for scoring");
        cmd->add_option("--preprocess", cluster_args.preprocess_name,
                        "standardize | normalize | pca:<dims>");
        cmd->add_option("--method", cluster_args.method,
                        "kmeans | bregman_hard | kmeans_power | bregman_power");
        cmd->add_option("--family", cluster_args.family,
                        "gaussian | binomial | poisson | gamma");
        cmd->add_option("--k", cluster_args.k, "Cluster count");
        cmd->add_option("--seed", cluster_args.seed, "Random seed");
        cmd->add_option("--restarts", cluster_args.restarts, "Independent restarts");
        cmd->add_option("--max-iters", cluster_args.max_iters, "Iteration cap");
        cmd->add_option("--tol", cluster_args.tol, "Relative objective tolerance");
        cmd->add_option("--s0", cluster_args.s0, "Starting power-mean exponent");
        cmd->add_option("--anneal-factor", cluster_args.anneal_factor,
                        "Exponent growth factor per iteration");
        cmd->add_option("--s-min", cluster_args.s_min, "Exponent floor");
        cmd->add_option("--out", cluster_args.out, "Assignments CSV path");
        cmd->callback([&] { run_cluster(cluster_args); });
    }

    MetricsArgs metrics_args;
    {
        CLI::App* cmd = app.add_subcommand("metrics", "Compare two labelings");
        cmd->add_option("--truth", metrics_args.truth, "CSV with ground-truth labels")
            ->required();
        cmd->add_option("--truth-column", metrics_args.truth_column, "Truth label column");
        cmd->add_option("--pred", metrics_args.pred, "CSV with predicted labels")->required();
        cmd->add_option("--pred-column", metrics_args.pred_column, "Prediction label column");
        cmd->callback([&] { run_metrics(metrics_args); });
    }

    DbgsaArgs dbgsa_args;
    std::string dbgsa_force_mode = "proportional";
    {
        CLI::App* cmd = app.add_subcommand(
            "dbgsa", "Search (eta, K, d) for the best data improvement");
        cmd->add_option("--data", dbgsa_args.config.data_path, "Input CSV path");
        cmd->add_option("--label-column", dbgsa_args.config.label_column,
                        "Label column to carry through");
        cmd->add_option("--preprocess", dbgsa_args.config.preprocess,
                        "standardize | normalize | pca:<dims>");
        cmd->add_option("--k", dbgsa_args.config.k, "Cluster count for reference centroids");
        cmd->add_option("--family", dbgsa_args.config.family,
                        "Divergence family for reference centroids");
        cmd->add_option("--seed", dbgsa_args.config.seed, "Random seed");
        add_grid_flags(cmd, dbgsa_args.config.grid);
        add_search_flags(cmd, dbgsa_args.config.options, dbgsa_force_mode,
                         dbgsa_args.threads_given);
        cmd->add_option("--from-manifest", dbgsa_args.from_manifest,
                        "Replay a previous run from its manifest");
        cmd->add_option("--out-dir", dbgsa_args.out_dir, "Output directory")->required();
        cmd->callback([&] {
            dbgsa_args.config.options.force_mode = force_mode_from_name(dbgsa_force_mode);
            if (dbgsa_args.from_manifest.empty() && dbgsa_args.config.data_path.empty()) {
                throw CLI::RequiredError("--data (or --from-manifest)");
            }
            run_dbgsa_cmd(dbgsa_args);
        });
    }

    SimulationArgs simulation_args;
    {
        CLI::App* cmd = app.add_subcommand(
            "simulation-study",
            "ARI of all four methods on synthetic mixtures from all four families");
        cmd->add_option("--replicates", simulation_args.config.replicates,
                        "Replicates per family");
        cmd->add_option("--seed", simulation_args.config.seed, "Master seed");
        cmd->add_option("--threads", simulation_args.config.threads,
                        "Worker threads (0 = all cores)")
            ->each([&simulation_args](const std::string&) {
                simulation_args.threads_given = true;
            });
        cmd->add_option("--k", simulation_args.config.k, "Cluster count");
        cmd->add_option("--centers", simulation_args.centers, "Cluster centers");
        cmd->add_option("--samples-per-center", simulation_args.config.samples_per_center,
                        "Points per cluster");
        cmd->add_option("--noise-scale", simulation_args.config.noise_scale,
                        "Gaussian standard deviation");
        cmd->add_option("--binomial-trials", simulation_args.config.binomial_trials,
                        "Trial count for binomial draws");
        cmd->add_option("--gamma-shape", simulation_args.config.gamma_shape,
                        "Shape for gamma draws");
        cmd->add_option("--max-iters", simulation_args.config.max_iters, "Iteration cap");
        cmd->add_option("--tol", simulation_args.config.tol,
                        "Relative objective tolerance");
        cmd->add_option("--restarts", simulation_args.config.restarts,
                        "Restarts per fit");
        cmd->add_option("--s0", simulation_args.config.power.s0,
                        "Starting power-mean exponent");
        cmd->add_option("--anneal-factor", simulation_args.config.power.anneal_factor,
                        "Exponent growth factor per iteration");
        cmd->add_option("--s-min", simulation_args.config.power.s_min, "Exponent floor");
        cmd->add_option("--from-manifest", simulation_args.from_manifest,
                        "Replay a previous run from its manifest");
        cmd->add_option("--out-dir", simulation_args.out_dir, "Output directory")
            ->required();
        cmd->callback([&] { run_simulation_cmd(simulation_args); });
    }

    ImprovementArgs improvement_args;
    std::string improvement_force_mode = "proportional";
    {
        CLI::App* cmd = app.add_subcommand(
            "improvement-study",
            "NMI of three clusterers on labeled datasets, raw versus improved");
        cmd->add_option("--data", improvement_args.config.dataset_paths,
                        "Labeled dataset CSV paths");
        cmd->add_option("--label-column", improvement_args.config.label_column,
                        "Ground-truth label column");
        cmd->add_option("--seed", improvement_args.config.seed, "Master seed");
        cmd->add_option("--threads", improvement_args.config.threads,
                        "Worker threads (0 = all cores)")
            ->each([&improvement_args](const std::string&) {
                improvement_args.threads_given = true;
            });
        cmd->add_option("--recipes", improvement_args.config.recipes_path,
                        "Preprocessing recipe file (name=spec lines)");
        cmd->add_option("--kmeans-restarts", improvement_args.config.kmeans_restarts,
                        "Restarts for the kmeans comparisons");
        cmd->add_option("--dc-percentile", improvement_args.config.dc_percentile,
                        "Density-peak cutoff quantile");
        add_grid_flags(cmd, improvement_args.config.grid);
        cmd->add_flag("--theta-on-raw", improvement_args.config.search.theta_on_raw,
                      "Fit reference centroids once on the input data");
        cmd->add_option("--bpk-restarts", improvement_args.config.search.bpk_restarts,
                        "Restarts for the reference-centroid fit");
        cmd->add_option("--max-passes", improvement_args.config.search.max_passes,
                        "Refinement pass limit");
        cmd->add_option("--pass-tol", improvement_args.config.search.pass_tol,
                        "Relative objective improvement needed to keep refining");
        cmd->add_option("--force-mode", improvement_force_mode,
                        "proportional | unit_scaled");
        cmd->add_option("--from-manifest", improvement_args.from_manifest,
                        "Replay a previous run from its manifest");
        cmd->add_option("--out-dir", improvement_args.out_dir, "Output directory")
            ->required();
        cmd->callback([&] {
            improvement_args.config.search.force_mode =
                force_mode_from_name(improvement_force_mode);
            if (improvement_args.from_manifest.empty() &&
                improvement_args.config.dataset_paths.empty()) {
                throw CLI::RequiredError("--data (or --from-manifest)");
            }
            run_improvement_cmd(improvement_args);
        });
    }

    PlotdataArgs plotdata_args;
    {
        CLI::App* cmd = app.add_subcommand(
            "plotdata", "Emit 2-D coordinates with labels for external plotting");
        cmd->add_option("--data", plotdata_args.data, "Input CSV path")->required();
        cmd->add_option("--label-column", plotdata_args.label_column,
                        "Label column in the input");
        cmd->add_option("--assignments", plotdata_args.assignments,
                        "CSV whose labels override the input's");
        cmd->add_option("--assignments-column", plotdata_args.assignments_column,
                        "Label column in the assignments CSV");
        cmd->add_option("--out", plotdata_args.out, "Output CSV path")->required();
        cmd->callback([&] { run_plotdata(plotdata_args); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const GuardViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
