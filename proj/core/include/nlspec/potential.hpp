#pragma once

#include "nlspec/types.hpp"

#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace nlspec {

enum class PotentialKind { constant, polynomial, trigonometric, tabulated };

/// Marker for terms that can be differentiated any number of times.
inline constexpr int kAnyOrder = std::numeric_limits<int>::max();

/// One additive piece of a coefficient function on [0,1].
struct PotentialTerm {
    PotentialKind kind = PotentialKind::constant;
    // constant: {c}; polynomial: c0, c1, ...; trigonometric: {a}; tabulated: node values
    std::vector<Complex> coefficients;
    double frequency = 0.0;      // trigonometric: a cos(frequency * pi * x)
    std::vector<double> nodes;   // tabulated abscissae, ascending, spanning [0,1]

    int derivative_order_available() const;
};

/// Complex coefficient function on [0,1], stored as a sum of terms.
/// A default constructed Potential is identically zero.
class Potential {
public:
    Potential() = default;

    static Potential constant(Complex value);
    static Potential polynomial(std::vector<Complex> coefficients);
    /// amplitude * cos(frequency * pi * x)
    static Potential trigonometric(Complex amplitude, double frequency);
    /// Piecewise linear interpolation of (x, value) samples; x must start at 0 and end at 1.
    static Potential tabulated(std::vector<double> x, std::vector<Complex> values);

    Potential& operator+=(const Potential& other);
    friend Potential operator+(Potential a, const Potential& b) { return a += b; }

    /// Value of the deriv-th derivative at x in [0,1].
    Complex eval(double x, int deriv = 0) const;
    Complex operator()(double x) const { return eval(x); }

    int derivative_order_available() const;
    std::span<const PotentialTerm> terms() const { return terms_; }
    bool is_zero() const;

    /// Sup norm on [0,1]. Exact for constants and tables, sampled otherwise.
    double sup_norm() const;

private:
    std::vector<PotentialTerm> terms_;
};

inline Complex eval(const Potential& p, double x, int deriv = 0) { return p.eval(x, deriv); }

/// Parse "const:re[,im]", "poly:c0,c1,...", "trig:a,k", "file:path".
/// Terms may be summed with '+' in front of the next keyword, e.g. "const:1+trig:0.5,2".
/// Complex literals are written "re", "re+imi", "re-imi" or "imi".
Potential parse_potential(std::string_view text);

/// Parse a single complex literal.
Complex parse_complex(std::string_view text);

} // namespace nlspec
