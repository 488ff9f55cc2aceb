#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bgclust {

// A problem with user-supplied data (unreadable file, malformed cell, bad
// label). The CLI maps this to exit code 2; invalid_argument maps to 1.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Step-size guard failure in the gravity update: eta * G_i * K must stay
// strictly below 2 for every point at every iteration, otherwise the move
// overshoots the local neighbor mean instead of contracting toward it.
class GuardViolation : public std::runtime_error {
public:
    GuardViolation(std::size_t point, std::size_t iteration, double value);

    std::size_t point() const { return point_; }
    std::size_t iteration() const { return iteration_; }
    double value() const { return value_; }

private:
    std::size_t point_ = 0;
    std::size_t iteration_ = 0;
    double value_ = 0.0;
};

}  // namespace bgclust
