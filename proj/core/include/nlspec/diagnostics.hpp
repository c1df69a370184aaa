#pragma once

#include "nlspec/galerkin.hpp"
#include "nlspec/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nlspec {

/// A method as it appears in a comparison; series carries its length N.
struct MethodSpec {
    Method method = Method::shooting;
    int series_N = 4;

    std::string label() const;  // "shooting", "series4", ...
    friend bool operator==(const MethodSpec&, const MethodSpec&) = default;
};

struct PairGap {
    std::size_t a = 0;  // indices into ComparisonRow::records
    std::size_t b = 0;
    double gap = 0.0;
    double scaled1 = 0.0;  // n * gap
    double scaled3 = 0.0;  // n^3 * gap
};

struct ComparisonRow {
    long n = 0;
    std::vector<EigenvalueRecord> records;  // one per requested method, in request order
    std::vector<PairGap> gaps;              // all pairs a < b
    /// Gap of each record to the reference (shooting when present, else the first method).
    std::vector<double> reference_gap;
};

struct CompareOptions {
    int galerkin_K = 256;
    unsigned jobs = 0;
};

/// One row per n in [n_lo, n_hi]. Galerkin needs n_hi <= K/4.
std::vector<ComparisonRow> compare(const OperatorContext& ctx, long n_lo, long n_hi,
                                   const std::vector<MethodSpec>& methods,
                                   const CompareOptions& opt = {});

/// Index of the reference method used by compare.
std::size_t reference_index(const std::vector<MethodSpec>& methods);

inline constexpr double kGapFloor = 1e-11;

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t used = 0;
    bool below_floor = false;  // fewer than 5 usable points
};

/// Least-squares slope of log(error) against log(n). Non-positive errors are always dropped;
/// errors below `floor` are dropped as well.
SlopeFit slope_fit(const std::vector<std::pair<double, double>>& pairs, double floor = 0.0);

struct BariTerm {
    long n = 0;
    double d = 0.0;            // L2 distance to psi_n
    double partial_sum = 0.0;  // sum of d^2 up to n
};

/// d_n for shooting eigenfunctions, n in [n_lo, n_hi] (n_lo >= 1).
std::vector<BariTerm> bari_closeness(const OperatorContext& ctx, long n_lo, long n_hi,
                                     unsigned jobs = 0);

/// d_n from Galerkin eigenvectors: distance between the phase-fixed coefficient vector and e_n.
std::vector<BariTerm> bari_closeness_galerkin(const OperatorContext& ctx, int K, int n_max);

/// |lambda_n(alpha + delta) - lambda_n(alpha)| (shooting) for each delta.
std::vector<double> continuity_gaps(const Potential& V, const Potential& Q, double alpha,
                                    double beta, long n, const std::vector<double>& deltas,
                                    int resolution = kDefaultResolution);

} // namespace nlspec
