#pragma once

#include <span>
#include <string>
#include <vector>

namespace bgclust {

// Coordinates this close to zero (or below) are outside the domain of the
// positive-support generator functions.
inline constexpr double kDomainEpsilon = 1e-12;

enum class DivKind { squared_euclidean, binomial_kl, poisson, gamma };

// A Bregman divergence d(x, y) = phi(x) - phi(y) - <grad phi(y), x - y> for
// one of four generator functions phi, each matched to a data-generating
// family:
//   squared_euclidean  phi(x) = sum x_i^2
//   binomial_kl        phi(x) = sum x_i log x_i
//   poisson            phi(x) = sum (x_i log x_i - x_i)
//   gamma              phi(x) = sum (alpha + alpha log(alpha / x_i))
struct DivergenceFamily {
    DivKind kind = DivKind::squared_euclidean;
    double alpha = 1.0;  // gamma only

    bool positive_support() const { return kind != DivKind::squared_euclidean; }

    // CLI name mapping: gaussian | binomial | poisson | gamma.
    static DivergenceFamily from_name(const std::string& name);
    const char* name() const;
};

double phi(const DivergenceFamily& family, std::span<const double> x);
std::vector<double> grad_phi(const DivergenceFamily& family, std::span<const double> y);

// Closed-form divergence; agrees with the definition above to ~1e-9 relative
// error and is clamped below at 0 against rounding.
double bregman(const DivergenceFamily& family, std::span<const double> x,
               std::span<const double> y);

// The definition evaluated literally from phi and grad_phi (reference form,
// used to cross-check the closed forms; not clamped).
double bregman_reference(const DivergenceFamily& family, std::span<const double> x,
                         std::span<const double> y);

}  // namespace bgclust
