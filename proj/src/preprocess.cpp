#include "bgclust/preprocess.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace bgclust {

PreprocessSpec preprocess_spec_from_name(const std::string& name) {
    PreprocessSpec spec;
    if (name == "standardize") {
        spec.kind = PreprocessKind::standardize;
        return spec;
    }
    if (name == "normalize") {
        spec.kind = PreprocessKind::normalize;
        return spec;
    }
    if (name.rfind("pca:", 0) == 0) {
        spec.kind = PreprocessKind::pca;
        const std::string dims = name.substr(4);
        try {
            const long d = std::stol(dims);
            if (d < 1) throw std::invalid_argument("dims");
            spec.target_dims = static_cast<std::size_t>(d);
        } catch (...) {
            throw std::invalid_argument("bad pca dimension count: '" + dims + "'");
        }
        return spec;
    }
    throw std::invalid_argument("unknown preprocessing '" + name +
                                "' (expected standardize|normalize|pca:<dims>)");
}

std::string to_string(const PreprocessSpec& spec) {
    switch (spec.kind) {
        case PreprocessKind::standardize: return "standardize";
        case PreprocessKind::normalize: return "normalize";
        case PreprocessKind::pca: return "pca:" + std::to_string(spec.target_dims);
    }
    return "?";
}

namespace {

DataMatrix standardize(const DataMatrix& data) {
    DataMatrix out = data;
    for (std::size_t j = 0; j < data.cols; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < data.rows; ++i) mean += data.at(i, j);
        mean /= static_cast<double>(data.rows);
        double ss = 0.0;
        for (std::size_t i = 0; i < data.rows; ++i) {
            const double d = data.at(i, j) - mean;
            ss += d * d;
        }
        const double sd =
            data.rows > 1 ? std::sqrt(ss / static_cast<double>(data.rows - 1)) : 0.0;
        for (std::size_t i = 0; i < data.rows; ++i) {
            out.at(i, j) = sd > 0.0 ? (data.at(i, j) - mean) / sd : 0.0;
        }
    }
    return out;
}

DataMatrix normalize(const DataMatrix& data, double lo, double hi) {
    if (!(lo < hi)) {
        throw std::invalid_argument("normalize: range must satisfy lo < hi");
    }
    DataMatrix out = data;
    for (std::size_t j = 0; j < data.cols; ++j) {
        double mn = data.at(0, j), mx = data.at(0, j);
        for (std::size_t i = 1; i < data.rows; ++i) {
            mn = std::min(mn, data.at(i, j));
            mx = std::max(mx, data.at(i, j));
        }
        for (std::size_t i = 0; i < data.rows; ++i) {
            out.at(i, j) =
                mx > mn ? lo + (hi - lo) * (data.at(i, j) - mn) / (mx - mn) : lo;
        }
    }
    return out;
}

DataMatrix pca(const DataMatrix& data, std::size_t target_dims) {
    if (target_dims > data.cols) {
        throw std::invalid_argument("pca: target_dims exceeds the column count");
    }
    if (data.rows < 2) {
        throw std::invalid_argument("pca: need at least two rows");
    }
    const auto n = static_cast<Eigen::Index>(data.rows);
    const auto m = static_cast<Eigen::Index>(data.cols);
    Eigen::MatrixXd X(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            X(i, j) = data.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    const Eigen::RowVectorXd mean = X.colwise().mean();
    X.rowwise() -= mean;
    const Eigen::MatrixXd cov = (X.transpose() * X) / static_cast<double>(n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("pca: eigendecomposition failed");
    }

    // Eigen returns eigenvalues ascending; take the top components in
    // descending order and fix each sign so the largest-magnitude loading is
    // positive (ties resolved by the first such coordinate).
    Eigen::MatrixXd W(m, static_cast<Eigen::Index>(target_dims));
    for (std::size_t c = 0; c < target_dims; ++c) {
        Eigen::VectorXd v = solver.eigenvectors().col(m - 1 - static_cast<Eigen::Index>(c));
        Eigen::Index arg = 0;
        double best = -1.0;
        for (Eigen::Index r = 0; r < m; ++r) {
            if (std::abs(v(r)) > best) {
                best = std::abs(v(r));
                arg = r;
            }
        }
        if (v(arg) < 0.0) v = -v;
        W.col(static_cast<Eigen::Index>(c)) = v;
    }
    const Eigen::MatrixXd Y = X * W;

    DataMatrix out = make_matrix(data.rows, target_dims, data.name);
    out.labels = data.labels;
    for (std::size_t c = 0; c < target_dims; ++c) {
        out.col_names.push_back("pc" + std::to_string(c));
    }
    for (std::size_t i = 0; i < data.rows; ++i) {
        for (std::size_t j = 0; j < target_dims; ++j) {
            out.at(i, j) = Y(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return out;
}

}  // namespace

DataMatrix preprocess(const DataMatrix& data, const PreprocessSpec& spec) {
    if (data.rows == 0 || data.cols == 0) {
        throw std::invalid_argument("preprocess: empty matrix");
    }
    switch (spec.kind) {
        case PreprocessKind::standardize: return standardize(data);
        case PreprocessKind::normalize: return normalize(data, spec.range_lo, spec.range_hi);
        case PreprocessKind::pca: return pca(data, spec.target_dims);
    }
    throw std::invalid_argument("preprocess: unknown kind");
}

}  // namespace bgclust
