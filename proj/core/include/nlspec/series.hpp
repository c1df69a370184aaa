#pragma once

#include "nlspec/roots.hpp"

#include <span>
#include <vector>

namespace nlspec {

/// Jets about z = pi n of f_j(z) = (L M^j cos(z x))(1), j = 0..j_max.
/// F(z) = -z sin z + sum_j f_j(z) / z^j.
std::vector<TaylorJet> compute_fj_jets(const OperatorContext& ctx, long n, int j_max, int order);

/// E_{t,l} = sum_j (-1)^{l-j-1} C(l-1, j) c_{j, t-l+j+1}, c_{j,s} the s-th Taylor coefficient of f_j.
Complex compute_E(std::span<const TaylorJet> fj, int t, int l);

/// All ordered t-tuples of non-negative integers summing to p, in lexicographic order.
/// Results are cached; the reference stays valid for the life of the program.
const std::vector<std::vector<int>>& weak_compositions(int p, int t);

/// Series coefficients rho_0..rho_{N-1} of sqrt(lambda_n) = pi n + sum_i rho_i / (pi n)^{i+1}.
std::vector<Complex> compute_rho(std::span<const TaylorJet> fj, long n, int N);

struct CoefficientTable {
    long n = 0;
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<TaylorJet> fj;
    std::vector<Complex> rho;
};

CoefficientTable build_coefficient_table(const OperatorContext& ctx, long n, int N);

/// Fitted envelope |rho_i| <= c1 * c2^i.
struct RemainderFit {
    double c1 = 0.0;
    double c2 = 0.0;
};

RemainderFit fit_rho_envelope(std::span<const Complex> rho);

/// N-term eigenvalue with remainder estimate 2 c1 c2^N / (pi n)^N stored as residual.
/// Throws NumericalError when c2 >= pi n.
EigenvalueRecord series_eigenvalue(const CoefficientTable& table, int N);

std::vector<EigenvalueRecord> series_eigenvalues(const OperatorContext& ctx, long n_lo, long n_hi,
                                                 int N, unsigned jobs = 0);

} // namespace nlspec
