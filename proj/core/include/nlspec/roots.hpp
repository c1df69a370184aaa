#pragma once

#include "nlspec/cauchy.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace nlspec {

enum class Method { shooting, series, asymptotic2, asymptotic4, galerkin };

std::string_view to_string(Method m);
/// Accepts shooting, series, asymptotic2, asymptotic4, galerkin.
Method parse_method(std::string_view s);

/// One eigenvalue lambda_n as produced by one method.
struct EigenvalueRecord {
    int n = 0;
    Complex lambda{};
    Method method = Method::shooting;
    /// |F(z)| for shooting, fitted remainder bound for series, K vs 2K change for galerkin,
    /// 0 for the closed-form asymptotics.
    double residual = 0.0;
    /// sqrt(lambda) as pi*n + offset, when the method produces it.
    std::optional<Wavenumber> z;
};

/// |lambda_a - lambda_b|, evaluated through the wavenumber offsets when both are available.
double eigen_gap(const EigenvalueRecord& a, const EigenvalueRecord& b);

/// Rectangle {|Re z - pi n - re_shift| <= re_half, |Im z| <= im_half}.
/// The defaults give the strip cell pi(n - 1/2) <= Re z <= pi(n + 1/2).
struct RootBox {
    long n = 1;
    double im_half = 0.1;
    double re_shift = 0.0;
    double re_half = kPi / 2;

    double re_lo() const { return kPi * static_cast<double>(n) + re_shift - re_half; }
    double re_hi() const { return kPi * static_cast<double>(n) + re_shift + re_half; }
    bool contains(const Wavenumber& z) const;
};

/// Box for index n >= 1 with half height max(sqrt(2) * v_bound, 0.1).
RootBox make_box(long n, double v_bound);

/// Neumann contraction bound v e^{sqrt(2) v} / Re z on the box (must be < 1).
double contraction_ratio(const RootBox& box, double v_bound);

/// Zero of F on or near the real axis found by F on the box boundary.
class BoundaryZeroError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

struct RootOptions {
    double tol = 1e-10;     // accept when |F(z)| <= tol * max(1, |z|)
    int max_iterations = 50;
    CauchyOptions cauchy{};
};

struct RootResult {
    Wavenumber z;
    double residual = 0.0;
    int iterations = 0;
};

/// Newton iteration on F from the box centre using first-order jets.
RootResult find_root(const OperatorContext& ctx, const RootBox& box, const RootOptions& opt = {});

/// Winding number of F around the box boundary using at least min_samples points.
int count_roots(const OperatorContext& ctx, const RootBox& box, int min_samples = 256);

/// count_roots, enlarging the box height by 1.5 when a boundary zero is hit (up to 3 times).
int count_roots_with_retry(const OperatorContext& ctx, RootBox box, int min_samples = 256);

/// Smallest n >= 1 for which the contraction bound holds on the box and the box holds
/// exactly one zero of F.
long find_n_check(const OperatorContext& ctx, long n_max = 2000);

EigenvalueRecord shooting_eigenvalue(const OperatorContext& ctx, long n, const RootOptions& opt = {});
std::vector<EigenvalueRecord> shooting_eigenvalues(const OperatorContext& ctx, long n_lo, long n_hi,
                                                   unsigned jobs = 0, const RootOptions& opt = {});

} // namespace nlspec
