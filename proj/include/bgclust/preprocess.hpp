#pragma once

#include <cstddef>
#include <string>

#include "bgclust/data.hpp"

namespace bgclust {

enum class PreprocessKind { standardize, normalize, pca };

struct PreprocessSpec {
    PreprocessKind kind = PreprocessKind::normalize;
    std::size_t target_dims = 2;  // pca only
    double range_lo = 0.0;        // normalize only
    double range_hi = 1.0;
};

// Parse "standardize", "normalize", or "pca:<dims>".
PreprocessSpec preprocess_spec_from_name(const std::string& name);
std::string to_string(const PreprocessSpec& spec);

// Column-wise feature scaling / projection. Labels and name pass through.
//   standardize  (x - mean) / sample_sd, sd computed with n-1; zero-sd
//                columns map to 0
//   normalize    affine map of each column onto [range_lo, range_hi];
//                constant columns map to range_lo
//   pca          project onto the top target_dims principal components
//                (eigenvectors of the sample covariance, eigenvalues
//                descending, sign fixed so the largest-magnitude loading of
//                each component is positive)
DataMatrix preprocess(const DataMatrix& data, const PreprocessSpec& spec);

}  // namespace bgclust
