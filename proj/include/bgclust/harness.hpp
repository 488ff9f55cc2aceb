#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bgclust/clustering.hpp"
#include "bgclust/data.hpp"
#include "bgclust/dbgsa.hpp"
#include "bgclust/manifest.hpp"
#include "bgclust/power_mean.hpp"
#include "bgclust/preprocess.hpp"

namespace bgclust {

// Center lists round-trip as "x0,x1;y0,y1;..." (one center per
// semicolon-separated group) in flags and manifests.
std::string centers_to_string(const std::vector<std::vector<double>>& centers);
std::vector<std::vector<double>> centers_from_string(const std::string& text);

// Rectangular report, emitted both as CSV and as aligned plain text. Cells
// are preformatted strings (numbers through format_double) so the two
// renderings and any rerun are byte-identical.
struct TableReport {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    std::string to_csv() const;
    std::string to_text() const;
};

// ---------------------------------------------------------------------------
// Simulation study: three well-separated clusters are drawn per family
// (gaussian / binomial / poisson / gamma), all four clustering methods run on
// the same data with the same initialization seed, and ARI against the
// generating labels is aggregated over replicates.
// ---------------------------------------------------------------------------

struct SimulationConfig {
    std::size_t replicates = 50;
    std::uint64_t seed = 1729;
    std::size_t threads = 1;
    std::size_t k = 3;
    std::vector<std::vector<double>> centers = {{10.0, 10.0}, {20.0, 20.0}, {40.0, 40.0}};
    std::size_t samples_per_center = 99;
    double noise_scale = 0.5;
    int binomial_trials = 100;
    double gamma_shape = 15.0;
    std::size_t max_iters = 100;
    double tol = 1e-6;
    std::size_t restarts = 1;
    PowerMeanConfig power;
};

struct SimulationCell {
    std::string family;
    std::string method;
    double mean = 0.0;
    double sd = 0.0;
};

struct SimulationResult {
    TableReport table;  // family, method, ari_mean, ari_sd, replicates (16 rows)
    TableReport raw;    // family, method, replicate, ari (one row per fit)
    std::vector<SimulationCell> cells;  // numeric aggregates, table order
    Manifest manifest;  // every knob, seed streams, per-family data hashes
};

SimulationResult run_simulation_study(const SimulationConfig& config);

// Rebuild the exact configuration of a previous run from its manifest so the
// rerun is byte-identical (thread count may differ; outputs do not).
SimulationConfig simulation_config_from_manifest(const Manifest& manifest);

// Writes simulation_table.csv, simulation_table.txt, simulation_raw.csv and
// manifest.txt into dir (created when missing).
void write_simulation_outputs(const SimulationResult& result, const std::string& dir);

// ---------------------------------------------------------------------------
// Improvement study: per labeled dataset, preprocess by recipe, run the
// parameter search once to improve the data, then compare kmeans /
// agglomerative / density_peak NMI on raw versus improved data.
// ---------------------------------------------------------------------------

struct ImprovementConfig {
    std::vector<std::string> dataset_paths;
    std::string label_column = "label";
    std::uint64_t seed = 1729;
    std::size_t threads = 1;
    std::string recipes_path;  // optional recipe file; empty = built-in table
    std::size_t kmeans_restarts = 10;
    double dc_percentile = 0.02;
    SearchGrid grid;
    SearchOptions search;
    // Manifest-rerun extras: recipes embedded in a manifest override the file
    // / built-ins; nonzero expected hashes are verified after loading.
    std::vector<std::pair<std::string, std::string>> recipes_inline;
    std::vector<std::uint64_t> expected_hashes;
};

struct MethodOutcome {
    std::string method;  // kmeans | agglomerative | density_peak
    double nmi_raw = 0.0;
    double nmi_improved = 0.0;
    double increment_pct = 0.0;  // (improved - raw) / raw * 100
};

struct DatasetOutcome {
    std::string dataset;
    std::size_t n = 0;
    std::size_t m = 0;  // feature count after preprocessing
    std::size_t k = 0;  // number of distinct ground-truth labels
    std::string recipe;
    std::uint64_t data_hash = 0;  // hash of the loaded (unpreprocessed) data
    ParamCandidate best;          // winning search candidate
    std::size_t applied_passes = 0;
    std::vector<MethodOutcome> methods;
};

struct ImprovementResult {
    TableReport table;  // dataset, method, nmi_raw, nmi_improved, increment_pct
                        // plus one average row per method
    TableReport raw;    // the per-dataset rows only (average recomputable)
    std::vector<DatasetOutcome> datasets;
    Manifest manifest;
};

ImprovementResult run_improvement_study(const ImprovementConfig& config);
ImprovementConfig improvement_config_from_manifest(const Manifest& manifest);

// Writes improvement_table.csv/.txt, improvement_raw.csv, the published
// reference tables, and manifest.txt into dir.
void write_improvement_outputs(const ImprovementResult& result, const std::string& dir);

// ---------------------------------------------------------------------------
// Single parameter-search run on a CSV file (the dbgsa subcommand): load,
// optionally preprocess, search, and record everything needed to replay the
// run byte-for-byte.
// ---------------------------------------------------------------------------

struct DbgsaRunConfig {
    std::string data_path;
    std::string label_column;  // empty = no label column
    std::string preprocess;    // empty = none, else a preprocess spec name
    std::uint64_t seed = 1729;
    std::size_t k = 2;
    std::string family = "gaussian";
    SearchGrid grid;
    SearchOptions options;
    std::uint64_t expected_data_hash = 0;  // nonzero = verify after load
};

struct DbgsaRun {
    DataMatrix input;  // data after optional preprocessing
    SearchResult result;
    Manifest manifest;
};

DbgsaRun run_dbgsa(const DbgsaRunConfig& config);
DbgsaRunConfig dbgsa_config_from_manifest(const Manifest& manifest);

// Writes improved.csv, candidates.csv (every pass's grid with feasibility and
// scores) and manifest.txt into dir.
void write_dbgsa_outputs(const DbgsaRun& run, const std::string& dir);

// ---------------------------------------------------------------------------
// Preprocessing recipes: name=spec lines (spec as in
// preprocess_spec_from_name). Matching is by lower-cased dataset name;
// unknown datasets fall back to normalize.
// ---------------------------------------------------------------------------

std::vector<std::pair<std::string, std::string>> builtin_recipes();
std::vector<std::pair<std::string, std::string>> load_recipes(const std::string& path);
PreprocessSpec recipe_for(const std::string& dataset_name,
                          const std::vector<std::pair<std::string, std::string>>& recipes,
                          std::string* used_name = nullptr);

// ---------------------------------------------------------------------------
// Published reference values. These numbers are quoted from prior work for
// side-by-side comparison only; nothing in this repository re-runs the
// competitor methods, so they are cited constants, not measurements.
// ---------------------------------------------------------------------------

extern const char* const kReferenceCaption;

// Published NMI of the three clusterers on each benchmark dataset, before
// improvement and after this search's published counterpart.
TableReport published_nmi_reference();

// Published percentage NMI increments for four data-improvement methods
// (herd, sbca, hibog, dbgsa) on the six benchmarks, their per-method
// averages, and the overall per-improver averages.
TableReport published_increment_reference();

// ---------------------------------------------------------------------------
// Plot data: 2-D coordinates with a label column for external plotting.
// m == 2 passes through, m > 2 projects onto the top two principal
// components, m == 1 pads y with zeros. Label priority: explicit
// assignments, then the data's own labels, then zeros.
// ---------------------------------------------------------------------------

void write_plotdata(const DataMatrix& data, const std::vector<int>* assignments,
                    const std::string& path);

}  // namespace bgclust
