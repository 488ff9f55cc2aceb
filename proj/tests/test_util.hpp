#pragma once

// Shared helpers for the test binaries: scratch directories, file slurping,
// small random datasets, and exception-message capture.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgclust/data.hpp"
#include "bgclust/generate.hpp"
#include "bgclust/rng.hpp"

namespace testutil {

// Unique scratch directory under the system temp dir, removed on destruction.
class ScratchDir {
public:
    explicit ScratchDir(const std::string& tag) {
        namespace fs = std::filesystem;
        const fs::path base = fs::temp_directory_path();
        for (int i = 0; i < 100000; ++i) {
            fs::path p = base / ("bgclust_" + tag + "_" + std::to_string(i));
            std::error_code ec;
            if (fs::create_directories(p, ec) && !ec) {
                path_ = p;
                return;
            }
        }
        throw std::runtime_error("could not create a scratch directory");
    }
    ~ScratchDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }
    std::string subdir(const std::string& name) const {
        return (path_ / name).string();  // not created; callers create as needed
    }
    std::string dir() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

inline bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// Runs f, expecting it to throw E; returns the message ("" when it did not throw).
template <typename E, typename F>
std::string thrown_message(F&& f) {
    try {
        f();
    } catch (const E& e) {
        return e.what();
    } catch (...) {
    }
    return {};
}

inline bgclust::DataMatrix random_matrix(std::size_t rows, std::size_t cols, double lo,
                                         double hi, std::uint64_t seed) {
    bgclust::DataMatrix m = bgclust::make_matrix(rows, cols);
    bgclust::Rng rng(seed);
    for (auto& v : m.values) v = rng.uniform(lo, hi);
    return m;
}

// Gaussian blobs around the given centers, labeled by center index.
inline bgclust::DataMatrix blobs(const std::vector<std::vector<double>>& centers,
                                 std::size_t per, double noise, std::uint64_t seed) {
    bgclust::GeneratorSpec spec;
    spec.family = bgclust::GenFamily::gaussian;
    spec.centers = centers;
    spec.samples_per_center = per;
    spec.noise_scale = noise;
    spec.seed = seed;
    return bgclust::generate(spec);
}

}  // namespace testutil
