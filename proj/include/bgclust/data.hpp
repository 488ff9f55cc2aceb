#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bgclust {

// Dense row-major numeric matrix with optional per-row integer labels.
struct DataMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;          // rows * cols, row-major
    std::vector<int> labels;             // empty, or one label per row
    std::string name;
    std::vector<std::string> col_names;  // empty, or one name per column

    double& at(std::size_t i, std::size_t j) { return values[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
    std::span<const double> row(std::size_t i) const {
        return {values.data() + i * cols, cols};
    }
    bool has_labels() const { return !labels.empty(); }
};

DataMatrix make_matrix(std::size_t rows, std::size_t cols, std::string name = {});

// CSV with a mandatory header row and numeric body. When label_column is
// given, that column is split off into labels and must hold integers >= 0.
// Malformed input raises DataError naming the row and column.
DataMatrix load_csv(const std::string& path,
                    const std::optional<std::string>& label_column = std::nullopt);

void write_csv(const DataMatrix& data, const std::string& path);

// Shortest decimal text that round-trips the double exactly. Every report and
// manifest uses this so that reruns are byte-identical.
std::string format_double(double v);

// FNV-1a over the shape, value bit patterns, and labels; used to stamp
// datasets into manifests.
std::uint64_t content_hash(const DataMatrix& data);

}  // namespace bgclust
