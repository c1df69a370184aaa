#include "nlspec/series.hpp"

#include "nlspec/parallel.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace nlspec {

namespace {

double binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

double factorial(int n)
{
    double r = 1.0;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// sum over weak compositions of p into t parts of prod rho
Complex composition_sum(std::span<const Complex> rho, int p, int t)
{
    Complex s = 0.0;
    for (const auto& c : weak_compositions(p, t)) {
        Complex prod = 1.0;
        for (int k : c)
            prod *= rho[static_cast<std::size_t>(k)];
        s += prod;
    }
    return s;
}

void compositions(int p, int t, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (t == 0) {
        if (p == 0)
            out.push_back(cur);
        return;
    }
    if (t == 1) {
        cur.push_back(p);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = 0; first <= p; ++first) {
        cur.push_back(first);
        compositions(p - first, t - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<TaylorJet> compute_fj_jets(const OperatorContext& ctx, long n, int j_max, int order)
{
    if (n < 1)
        throw DomainError("series coefficients need n >= 1");
    if (j_max < 0)
        throw DomainError("j_max must be non-negative");
    Wavenumber center{n, 0.0};
    const auto& grid = ctx.grid();
    auto trig = trig_table(*grid, center, order);
    JetField u(grid, trig.cos);
    std::vector<TaylorJet> f;
    f.reserve(static_cast<std::size_t>(j_max) + 1);
    for (int j = 0; j <= j_max; ++j) {
        JetField bu = apply_B(ctx, u);
        f.push_back(cosine_transform_at_end(bu, trig));
        if (j < j_max)
            u = sine_transform(bu, trig);
    }
    return f;
}

Complex compute_E(std::span<const TaylorJet> fj, int t, int l)
{
    if (t < 0 || l < 1)
        throw DomainError("compute_E needs t >= 0 and l >= 1");
    Complex e = 0.0;
    for (int j = std::max(0, l - t - 1); j <= l - 1; ++j) {
        int s = t - l + j + 1;
        if (j >= static_cast<int>(fj.size()) || s > fj[static_cast<std::size_t>(j)].order())
            throw DomainError("f_" + std::to_string(j) + " jet lacks order " + std::to_string(s));
        double sign = (l - j - 1) % 2 == 0 ? 1.0 : -1.0;
        e += sign * binomial(l - 1, j) * fj[static_cast<std::size_t>(j)][s];
    }
    return e;
}

const std::vector<std::vector<int>>& weak_compositions(int p, int t)
{
    if (p < 0 || t < 0)
        throw DomainError("weak compositions need p, t >= 0");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<std::vector<std::vector<int>>>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{p, t}];
    if (!slot) {
        slot = std::make_unique<std::vector<std::vector<int>>>();
        std::vector<int> cur;
        compositions(p, t, cur, *slot);
    }
    return *slot;
}

std::vector<Complex> compute_rho(std::span<const TaylorJet> fj, long n, int N)
{
    if (N < 1)
        throw DomainError("series needs N >= 1");
    double parity = n % 2 == 0 ? 1.0 : -1.0;
    std::vector<Complex> rho;
    rho.reserve(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        Complex omega = 0.0;
        for (int p = 0; p <= i; ++p)
            for (int t = 0; t <= i - p; ++t) {
                if (t == 0 && p > 0)
                    continue;
                Complex comp = composition_sum(rho, p, t);
                if (comp == 0.0)
                    continue;
                omega += compute_E(fj, t, i + 1 - t - p) * comp;
            }
        Complex r = parity * omega;
        for (int s = 1; 2 * s <= i; ++s) {
            double c = (s % 2 == 0 ? 1.0 : -1.0) / factorial(2 * s + 1);
            r -= c * composition_sum(rho, i - 2 * s, 2 * s + 1);
        }
        rho.push_back(r);
    }
    return rho;
}

CoefficientTable build_coefficient_table(const OperatorContext& ctx, long n, int N)
{
    if (N < 1 || N > kMaxJetOrder)
        throw DomainError("series length N must lie in [1, 12]");
    CoefficientTable t;
    t.n = n;
    t.alpha = ctx.alpha();
    t.beta = ctx.beta();
    t.fj = compute_fj_jets(ctx, n, N - 1, std::max(N - 1, 2));
    t.rho = compute_rho(t.fj, n, N);
    return t;
}

RemainderFit fit_rho_envelope(std::span<const Complex> rho)
{
    // least squares slope of log|rho_i|, intercept lifted so every point lies below
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < rho.size(); ++i)
        if (std::abs(rho[i]) >= 1e-13)
            pts.emplace_back(static_cast<double>(i), std::log(std::abs(rho[i])));
    RemainderFit fit;
    if (pts.empty())
        return fit;
    double slope = 0.0;
    if (pts.size() >= 2) {
        double mx = 0.0, my = 0.0;
        for (auto [x, y] : pts) {
            mx += x;
            my += y;
        }
        mx /= static_cast<double>(pts.size());
        my /= static_cast<double>(pts.size());
        double sxy = 0.0, sxx = 0.0;
        for (auto [x, y] : pts) {
            sxy += (x - mx) * (y - my);
            sxx += (x - mx) * (x - mx);
        }
        slope = sxy / sxx;
    }
    double lift = -1e300;
    for (auto [x, y] : pts)
        lift = std::max(lift, y - slope * x);
    fit.c1 = std::exp(lift);
    fit.c2 = std::exp(slope);
    return fit;
}

EigenvalueRecord series_eigenvalue(const CoefficientTable& table, int N)
{
    if (N < 1 || N > static_cast<int>(table.rho.size()))
        throw DomainError("series length exceeds the coefficient table");
    double pin = kPi * static_cast<double>(table.n);
    std::span<const Complex> rho(table.rho.data(), static_cast<std::size_t>(N));
    RemainderFit fit = fit_rho_envelope(rho);
    if (fit.c2 >= pin)
        throw NumericalError("series unreliable at n=" + std::to_string(table.n) +
                             " (fitted growth " + std::to_string(fit.c2) + " >= pi n)");
    Complex xi = 0.0;
    for (int i = N - 1; i >= 0; --i)
        xi = (xi + rho[static_cast<std::size_t>(i)]) / pin;
    EigenvalueRecord rec;
    rec.n = static_cast<int>(table.n);
    rec.method = Method::series;
    rec.z = Wavenumber{table.n, xi};
    rec.lambda = rec.z->squared();
    rec.residual = 2.0 * fit.c1 * std::pow(fit.c2 / pin, N);
    return rec;
}

std::vector<EigenvalueRecord> series_eigenvalues(const OperatorContext& ctx, long n_lo, long n_hi,
                                                 int N, unsigned jobs)
{
    if (n_lo < 1 || n_hi < n_lo)
        throw DomainError("invalid n range");
    return parallel_map(static_cast<std::size_t>(n_hi - n_lo + 1), jobs, [&](std::size_t i) {
        long n = n_lo + static_cast<long>(i);
        return series_eigenvalue(build_coefficient_table(ctx, n, N), N);
    });
}

} // namespace nlspec
