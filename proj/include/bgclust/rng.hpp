#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace bgclust {

// SplitMix64-style finalizer used to derive independent stream seeds from a
// master seed plus arbitrary indices. Order-independent fan-out: every
// (master, index...) tuple maps to a fixed stream regardless of scheduling.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL + b * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix_seed(mix_seed(a, b), c);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                              std::uint64_t d) {
    return mix_seed(mix_seed(mix_seed(a, b), c), d);
}

// Deterministic samplers over mt19937_64. The standard <random> distributions
// are implementation-defined, so reports generated with them would not be
// reproducible across standard libraries; these samplers are pinned down to
// the raw engine bits and therefore portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller transform; one variate per call.
    double normal(double mean, double sd) {
        if (sd == 0.0) return mean;
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sd * r * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
    }

    // Sum of Bernoulli trials; exact and portable for the small trial counts
    // used by the binomial generator.
    long binomial(int trials, double p) {
        long hits = 0;
        for (int t = 0; t < trials; ++t) {
            if (uniform01() < p) ++hits;
        }
        return hits;
    }

    // Knuth's multiplication method; fine for the moderate rates in play.
    long poisson(double lambda) {
        const double limit = std::exp(-lambda);
        long k = 0;
        double prod = 1.0;
        do {
            ++k;
            prod *= uniform01();
        } while (prod > limit);
        return k - 1;
    }

    // Marsaglia-Tsang squeeze method; shape < 1 handled by boosting.
    double gamma(double shape, double scale) {
        if (shape <= 0.0 || scale <= 0.0) {
            throw std::invalid_argument("gamma sampler requires shape > 0 and scale > 0");
        }
        if (shape < 1.0) {
            const double u = uniform01();
            return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = 0.0;
            double v = 0.0;
            do {
                x = normal(0.0, 1.0);
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform01();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
                return d * v * scale;
            }
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace bgclust
