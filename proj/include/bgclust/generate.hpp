#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bgclust/data.hpp"

namespace bgclust {

enum class GenFamily { gaussian, binomial, poisson, gamma };

GenFamily gen_family_from_name(const std::string& name);
const char* to_string(GenFamily family);

// Synthetic mixture generator: one cluster of samples_per_center points per
// center, labeled by center index. Per family the population mean of every
// cluster equals its center coordinate:
//   gaussian  N(c, noise_scale^2)
//   binomial  Bin(trials, c / trials), requires c < trials
//   poisson   Pois(c)
//   gamma     Gamma(shape, c / shape)
struct GeneratorSpec {
    GenFamily family = GenFamily::gaussian;
    std::vector<std::vector<double>> centers;
    std::size_t samples_per_center = 99;
    double noise_scale = 0.5;  // gaussian only
    std::uint64_t seed = 0;
    int binomial_trials = 100;
    double gamma_shape = 15.0;
};

DataMatrix generate(const GeneratorSpec& spec);

}  // namespace bgclust
