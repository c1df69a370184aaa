#pragma once

#include "nlspec/nonlocal_op.hpp"

#include <vector>

namespace nlspec {

struct CauchyOptions {
    double tol = 1e-14;  // stop once a term falls below tol * ||cos(z x)||
    int max_terms = 200;
};

/// Solution of -y'' + B y = z^2 y, y(0) = 1, y'(0) = 0 as the Neumann series
/// phi = sum_j M^j cos(z x) / z^j.
struct CauchySolution {
    Wavenumber z;
    GridFunction phi;
    int terms_used = 0;
    double last_term_norm = 0.0;
};

CauchySolution solve_cauchy(const OperatorContext& ctx, const Wavenumber& z,
                            const CauchyOptions& opt = {});
CauchySolution solve_cauchy(const OperatorContext& ctx, Complex z, const CauchyOptions& opt = {});

/// F(z) = phi'(1) = -z sin z + (L phi)(1); its zeros are the square roots of the eigenvalues.
Complex char_fn(const OperatorContext& ctx, const Wavenumber& z, const CauchyOptions& opt = {});
Complex char_fn(const OperatorContext& ctx, Complex z, const CauchyOptions& opt = {});

/// Taylor jet of F in the increment of z about center.
TaylorJet char_fn_jet(const OperatorContext& ctx, const Wavenumber& center, int order,
                      const CauchyOptions& opt = {});

/// Eigenfunction for a root z: phi normalised to unit L2 norm with the phase chosen so
/// that its inner product with cos(pi n x), n = round(Re z / pi), is real and positive.
/// Throws DomainError when |F(z)| exceeds root_tol * max(1, |z|).
GridFunction eigenfunction(const OperatorContext& ctx, const Wavenumber& z, double root_tol = 1e-8);

} // namespace nlspec
