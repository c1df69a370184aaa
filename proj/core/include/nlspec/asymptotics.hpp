#pragma once

#include "nlspec/roots.hpp"

#include <array>
#include <span>
#include <vector>

namespace nlspec {

/// Closed-form ingredients of the large-n eigenvalue expansion.
struct AsymptoticTerms {
    long n = 0;
    std::array<Complex, 6> G{};  // G[0] is G_{n,1}
    Complex Lambda1{};
    Complex Lambda2{};           // only filled when has_lambda2
    bool has_lambda2 = false;
};

/// G_{n,1..6} and Lambda_1 always; Lambda_2 when both potentials have two derivatives
/// (or throws DomainError when require_lambda2 is set and they do not).
AsymptoticTerms compute_G(const OperatorContext& ctx, long n, bool require_lambda2 = false);

/// pi^2 n^2 + 2 int V(t) cos(pi n t) cos(pi n (t + alpha)) + 2 int Q(t) cos(pi n t) cos(pi n (t - beta))
EigenvalueRecord lambda_two_term(const OperatorContext& ctx, long n);

/// pi^2 n^2 + G_1 + Lambda_1 / (2 pi n) + Lambda_2 / (4 pi^2 n^2)
EigenvalueRecord lambda_four_term(const OperatorContext& ctx, long n);

/// t^2 + v cos(t alpha) + q cos(t beta), v = int_0^{1-alpha} V, q = int_beta^1 Q.
std::vector<Complex> gamma_curve(const OperatorContext& ctx, std::span<const double> t);

} // namespace nlspec
