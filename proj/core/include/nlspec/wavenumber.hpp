#pragma once

#include "nlspec/types.hpp"

namespace nlspec {

/// Spectral parameter z = pi * index + offset.
/// Keeping the multiple of pi separate lets cos(z x) and sin(z x) be evaluated
/// with the pi * index * x part reduced exactly, so nearby wavenumbers can be
/// compared through their offsets without cancellation.
struct Wavenumber {
    long index = 0;
    Complex offset{};

    Complex value() const { return kPi * static_cast<double>(index) + offset; }
    /// z^2 expanded around pi * index.
    Complex squared() const;

    static Wavenumber from(Complex z) { return {0, z}; }
    /// Representation with index = round(Re z / pi).
    static Wavenumber nearest(Complex z);
};

struct CosSin {
    Complex cos;
    Complex sin;
};

/// cos(z x) and sin(z x).
CosSin cos_sin(const Wavenumber& z, double x);

/// |z_a^2 - z_b^2| computed from offsets when both share an index.
double squared_gap(const Wavenumber& a, const Wavenumber& b);

} // namespace nlspec
