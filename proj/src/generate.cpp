#include "bgclust/generate.hpp"

#include <stdexcept>

#include "bgclust/rng.hpp"

namespace bgclust {

GenFamily gen_family_from_name(const std::string& name) {
    if (name == "gaussian") return GenFamily::gaussian;
    if (name == "binomial") return GenFamily::binomial;
    if (name == "poisson") return GenFamily::poisson;
    if (name == "gamma") return GenFamily::gamma;
    throw std::invalid_argument("unknown family: " + name +
                                " (expected gaussian|binomial|poisson|gamma)");
}

const char* to_string(GenFamily family) {
    switch (family) {
        case GenFamily::gaussian: return "gaussian";
        case GenFamily::binomial: return "binomial";
        case GenFamily::poisson: return "poisson";
        case GenFamily::gamma: return "gamma";
    }
    return "?";
}

DataMatrix generate(const GeneratorSpec& spec) {
    if (spec.centers.empty()) {
        throw std::invalid_argument("generate: centers must be non-empty");
    }
    if (spec.samples_per_center == 0) {
        throw std::invalid_argument("generate: samples_per_center must be >= 1");
    }
    if (spec.noise_scale < 0.0) {
        throw std::invalid_argument("generate: noise_scale must be nonnegative");
    }
    const std::size_t dims = spec.centers.front().size();
    for (const auto& c : spec.centers) {
        if (c.size() != dims) {
            throw std::invalid_argument("generate: centers must share one dimensionality");
        }
        if (spec.family != GenFamily::gaussian) {
            for (double v : c) {
                if (v <= 0.0) {
                    throw std::invalid_argument(
                        "generate: center coordinates must be strictly positive for " +
                        std::string(to_string(spec.family)));
                }
            }
        }
        if (spec.family == GenFamily::binomial) {
            for (double v : c) {
                if (v >= spec.binomial_trials) {
                    throw std::invalid_argument(
                        "generate: binomial centers must be below the trial count " +
                        std::to_string(spec.binomial_trials));
                }
            }
        }
    }
    if (spec.family == GenFamily::gamma && spec.gamma_shape <= 0.0) {
        throw std::invalid_argument("generate: gamma_shape must be positive");
    }

    DataMatrix m = make_matrix(spec.centers.size() * spec.samples_per_center, dims,
                               to_string(spec.family));
    m.labels.resize(m.rows);
    for (std::size_t j = 0; j < dims; ++j) {
        m.col_names.push_back("x" + std::to_string(j));
    }

    Rng rng(spec.seed);
    std::size_t row = 0;
    for (std::size_t ci = 0; ci < spec.centers.size(); ++ci) {
        const auto& c = spec.centers[ci];
        for (std::size_t s = 0; s < spec.samples_per_center; ++s, ++row) {
            m.labels[row] = static_cast<int>(ci);
            for (std::size_t j = 0; j < dims; ++j) {
                double v = 0.0;
                switch (spec.family) {
                    case GenFamily::gaussian:
                        v = rng.normal(c[j], spec.noise_scale);
                        break;
                    case GenFamily::binomial:
                        v = static_cast<double>(
                            rng.binomial(spec.binomial_trials, c[j] / spec.binomial_trials));
                        break;
                    case GenFamily::poisson:
                        v = static_cast<double>(rng.poisson(c[j]));
                        break;
                    case GenFamily::gamma:
                        v = rng.gamma(spec.gamma_shape, c[j] / spec.gamma_shape);
                        break;
                }
                m.at(row, j) = v;
            }
        }
    }
    return m;
}

}  // namespace bgclust
