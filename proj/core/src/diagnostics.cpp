#include "nlspec/diagnostics.hpp"

#include "nlspec/asymptotics.hpp"
#include "nlspec/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace nlspec {

std::string MethodSpec::label() const
{
    std::string s(to_string(method));
    if (method == Method::series)
        s += std::to_string(series_N);
    return s;
}

std::size_t reference_index(const std::vector<MethodSpec>& methods)
{
    for (std::size_t i = 0; i < methods.size(); ++i)
        if (methods[i].method == Method::shooting)
            return i;
    return 0;
}

std::vector<ComparisonRow> compare(const OperatorContext& ctx, long n_lo, long n_hi,
                                   const std::vector<MethodSpec>& methods, const CompareOptions& opt)
{
    if (methods.empty())
        throw DomainError("compare needs at least one method");
    if (n_lo < 1 || n_hi < n_lo)
        throw DomainError("invalid n range");

    bool want_galerkin = std::any_of(methods.begin(), methods.end(),
                                     [](const auto& m) { return m.method == Method::galerkin; });
    std::vector<EigenvalueRecord> galerkin;
    if (want_galerkin)
        galerkin = galerkin_eigenvalues(ctx, opt.galerkin_K, static_cast<int>(n_hi));

    int max_N = 1;
    for (const auto& m : methods)
        if (m.method == Method::series)
            max_N = std::max(max_N, m.series_N);

    std::size_t ref = reference_index(methods);
    auto rows = parallel_map(static_cast<std::size_t>(n_hi - n_lo + 1), opt.jobs, [&](std::size_t i) {
        long n = n_lo + static_cast<long>(i);
        ComparisonRow row;
        row.n = n;
        std::optional<CoefficientTable> table;
        for (const auto& m : methods) {
            switch (m.method) {
            case Method::shooting:
                row.records.push_back(shooting_eigenvalue(ctx, n));
                break;
            case Method::series:
                if (!table)
                    table = build_coefficient_table(ctx, n, max_N);
                row.records.push_back(series_eigenvalue(*table, m.series_N));
                break;
            case Method::asymptotic2:
                row.records.push_back(lambda_two_term(ctx, n));
                break;
            case Method::asymptotic4:
                row.records.push_back(lambda_four_term(ctx, n));
                break;
            case Method::galerkin:
                row.records.push_back(galerkin[static_cast<std::size_t>(n)]);
                break;
            }
        }
        double dn = static_cast<double>(n);
        for (std::size_t a = 0; a < row.records.size(); ++a)
            for (std::size_t b = a + 1; b < row.records.size(); ++b) {
                double g = eigen_gap(row.records[a], row.records[b]);
                row.gaps.push_back({a, b, g, dn * g, dn * dn * dn * g});
            }
        for (const auto& r : row.records)
            row.reference_gap.push_back(eigen_gap(r, row.records[ref]));
        return row;
    });
    return rows;
}

SlopeFit slope_fit(const std::vector<std::pair<double, double>>& pairs, double floor)
{
    std::vector<std::pair<double, double>> pts;
    for (auto [n, e] : pairs)
        if (n > 0.0 && e > 0.0 && e >= floor && std::isfinite(e))
            pts.emplace_back(std::log(n), std::log(e));
    SlopeFit fit;
    fit.used = pts.size();
    if (pts.size() < 5) {
        fit.below_floor = true;
        return fit;
    }
    double mx = 0.0, my = 0.0;
    for (auto [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxx = 0.0, sxy = 0.0;
    for (auto [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0) {
        fit.below_floor = true;
        return fit;
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

std::vector<BariTerm> bari_closeness(const OperatorContext& ctx, long n_lo, long n_hi, unsigned jobs)
{
    if (n_lo < 1 || n_hi < n_lo)
        throw DomainError("invalid n range");
    auto d = parallel_map(static_cast<std::size_t>(n_hi - n_lo + 1), jobs, [&](std::size_t i) {
        long n = n_lo + static_cast<long>(i);
        auto rec = shooting_eigenvalue(ctx, n);
        GridFunction phi = eigenfunction(ctx, *rec.z);
        GridFunction psi = sample(ctx.grid(), [n](double x) {
            return Complex(std::sqrt(2.0) * std::cos(kPi * static_cast<double>(n) * x));
        });
        return l2_norm(phi - psi);
    });
    std::vector<BariTerm> out;
    double sum = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        sum += d[i] * d[i];
        out.push_back({n_lo + static_cast<long>(i), d[i], sum});
    }
    return out;
}

std::vector<BariTerm> bari_closeness_galerkin(const OperatorContext& ctx, int K, int n_max)
{
    if (n_max < 0 || 4 * n_max > K)
        throw DomainError("Galerkin trusts only n <= K/4");
    EigenSystem es = dense_eigensystem(assemble(ctx, K));
    std::vector<BariTerm> out;
    double sum = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        const auto& v = es.vectors[static_cast<std::size_t>(n)];
        Complex c = v[static_cast<std::size_t>(n)];
        Complex phase = std::abs(c) > 0.0 ? std::conj(c) / std::abs(c) : Complex(1.0);
        double d2 = 0.0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            Complex w = phase * v[k] - (static_cast<int>(k) == n ? 1.0 : 0.0);
            d2 += std::norm(w);
        }
        sum += d2;
        out.push_back({n, std::sqrt(d2), sum});
    }
    return out;
}

std::vector<double> continuity_gaps(const Potential& V, const Potential& Q, double alpha,
                                    double beta, long n, const std::vector<double>& deltas,
                                    int resolution)
{
    OperatorContext base(V, Q, alpha, beta, resolution);
    EigenvalueRecord ref = shooting_eigenvalue(base, n);
    std::vector<double> out;
    for (double d : deltas) {
        OperatorContext moved(V, Q, alpha + d, beta, resolution);
        out.push_back(eigen_gap(shooting_eigenvalue(moved, n), ref));
    }
    return out;
}

} // namespace nlspec
