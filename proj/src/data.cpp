#include "bgclust/data.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bgclust/errors.hpp"

namespace bgclust {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_cell(const std::string& text, const std::string& path, std::size_t row,
                  const std::string& col) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v)) {
        throw DataError(path + ": row " + std::to_string(row) + ", column '" + col +
                        "': cannot parse '" + text + "' as a finite number");
    }
    return v;
}

}  // namespace

DataMatrix make_matrix(std::size_t rows, std::size_t cols, std::string name) {
    DataMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.values.assign(rows * cols, 0.0);
    m.name = std::move(name);
    return m;
}

DataMatrix load_csv(const std::string& path, const std::optional<std::string>& label_column) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open file: " + path);
    }

    std::string line;
    if (!std::getline(in, line)) {
        throw DataError(path + ": empty file, expected a header row");
    }
    const std::vector<std::string> header = split_line(line);

    std::ptrdiff_t label_idx = -1;
    if (label_column) {
        for (std::size_t j = 0; j < header.size(); ++j) {
            if (header[j] == *label_column) {
                label_idx = static_cast<std::ptrdiff_t>(j);
                break;
            }
        }
        if (label_idx < 0) {
            throw DataError(path + ": label column '" + *label_column + "' not found");
        }
    }

    DataMatrix m;
    m.cols = header.size() - (label_idx >= 0 ? 1 : 0);
    if (m.cols == 0) {
        throw DataError(path + ": no feature columns");
    }
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (static_cast<std::ptrdiff_t>(j) != label_idx) m.col_names.push_back(header[j]);
    }

    std::size_t row_no = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        ++row_no;
        const std::vector<std::string> fields = split_line(line);
        if (fields.size() != header.size()) {
            throw DataError(path + ": row " + std::to_string(row_no) + " has " +
                            std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(header.size()));
        }
        for (std::size_t j = 0; j < fields.size(); ++j) {
            const double v = parse_cell(fields[j], path, row_no, header[j]);
            if (static_cast<std::ptrdiff_t>(j) == label_idx) {
                if (v != std::floor(v) || v < 0.0 || v > 2147483647.0) {
                    throw DataError(path + ": row " + std::to_string(row_no) + ", column '" +
                                    header[j] + "': label '" + fields[j] +
                                    "' is not a nonnegative integer");
                }
                m.labels.push_back(static_cast<int>(v));
            } else {
                m.values.push_back(v);
            }
        }
    }
    m.rows = row_no;
    if (m.rows == 0) {
        throw DataError(path + ": no data rows");
    }

    // Derive a dataset name from the file stem.
    std::size_t slash = path.find_last_of("/\\");
    std::string stem = (slash == std::string::npos) ? path : path.substr(slash + 1);
    std::size_t dot = stem.find_last_of('.');
    if (dot != std::string::npos) stem = stem.substr(0, dot);
    m.name = stem;
    return m;
}

void write_csv(const DataMatrix& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot open file for writing: " + path);
    }
    for (std::size_t j = 0; j < data.cols; ++j) {
        if (j) out << ',';
        out << (j < data.col_names.size() ? data.col_names[j] : "x" + std::to_string(j));
    }
    if (data.has_labels()) out << ",label";
    out << '\n';
    for (std::size_t i = 0; i < data.rows; ++i) {
        for (std::size_t j = 0; j < data.cols; ++j) {
            if (j) out << ',';
            out << format_double(data.at(i, j));
        }
        if (data.has_labels()) out << ',' << data.labels[i];
        out << '\n';
    }
    if (!out) {
        throw DataError("write failed: " + path);
    }
}

std::string format_double(double v) {
    std::array<char, 40> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::uint64_t content_hash(const DataMatrix& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](const void* bytes, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(bytes);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 0x100000001b3ULL;
        }
    };
    const std::uint64_t shape[2] = {data.rows, data.cols};
    feed(shape, sizeof(shape));
    feed(data.values.data(), data.values.size() * sizeof(double));
    feed(data.labels.data(), data.labels.size() * sizeof(int));
    return h;
}

}  // namespace bgclust
