#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>

namespace nlspec {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Default number of grid intervals per unit length.
inline constexpr int kDefaultResolution = 4096;

/// Invalid input or violated precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not meet its contract
/// (non-convergence, root escaping its box, unreliable truncation).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace nlspec
