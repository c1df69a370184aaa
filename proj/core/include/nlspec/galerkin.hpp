#pragma once

#include "nlspec/roots.hpp"

#include <vector>

namespace nlspec {

/// Square complex matrix, row-major.
struct DenseMatrix {
    int dim = 0;
    std::vector<Complex> entries;

    DenseMatrix() = default;
    explicit DenseMatrix(int k) : dim(k), entries(static_cast<std::size_t>(k) * k) {}

    Complex& operator()(int r, int c) { return entries[static_cast<std::size_t>(r) * dim + c]; }
    Complex operator()(int r, int c) const { return entries[static_cast<std::size_t>(r) * dim + c]; }
};

/// Matrix of -y'' + B y in the Neumann cosine basis psi_0 = 1, psi_k = sqrt(2) cos(pi k x),
/// A_{km} = (pi k)^2 delta_{km} + <B psi_m, psi_k>, k, m < K.
DenseMatrix assemble(const OperatorContext& ctx, int K);

/// Eigenvalues ascending by modulus, ties broken by real then imaginary part.
std::vector<Complex> dense_eigs(const DenseMatrix& A);

/// Eigenpairs in the same order as dense_eigs; each vector has unit Euclidean norm.
struct EigenSystem {
    std::vector<Complex> values;
    std::vector<std::vector<Complex>> vectors;
};
EigenSystem dense_eigensystem(const DenseMatrix& A);

/// lambda_0..lambda_{n_max} from the K-mode matrix; residual is the change against 2K modes.
/// Requires n_max <= K/4, throws NumericalError when the change exceeds 1e-4.
std::vector<EigenvalueRecord> galerkin_eigenvalues(const OperatorContext& ctx, int K, int n_max);

} // namespace nlspec
