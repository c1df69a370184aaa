#include "nlspec/roots.hpp"

#include "nlspec/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nlspec {

namespace {

constexpr double kMinHalfHeight = 0.1;

std::string n_tag(long n)
{
    return "n=" + std::to_string(n);
}

} // namespace

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::shooting: return "shooting";
    case Method::series: return "series";
    case Method::asymptotic2: return "asymptotic2";
    case Method::asymptotic4: return "asymptotic4";
    case Method::galerkin: return "galerkin";
    }
    return "unknown";
}

Method parse_method(std::string_view s)
{
    for (Method m : {Method::shooting, Method::series, Method::asymptotic2, Method::asymptotic4,
                     Method::galerkin})
        if (to_string(m) == s)
            return m;
    throw DomainError("unknown method '" + std::string(s) + "'");
}

double eigen_gap(const EigenvalueRecord& a, const EigenvalueRecord& b)
{
    if (a.z && b.z)
        return squared_gap(*a.z, *b.z);
    return std::abs(a.lambda - b.lambda);
}

bool RootBox::contains(const Wavenumber& z) const
{
    Complex v = z.value();
    return v.real() >= re_lo() && v.real() <= re_hi() && std::abs(v.imag()) <= im_half;
}

RootBox make_box(long n, double v_bound)
{
    if (n < 1)
        throw DomainError("root boxes need n >= 1");
    if (!(v_bound >= 0.0))
        throw DomainError("potential bound must be non-negative");
    return {n, std::max(std::sqrt(2.0) * v_bound, kMinHalfHeight), 0.0, kPi / 2};
}

double contraction_ratio(const RootBox& box, double v_bound)
{
    return v_bound * std::exp(std::sqrt(2.0) * v_bound) / box.re_lo();
}

RootResult find_root(const OperatorContext& ctx, const RootBox& box, const RootOptions& opt)
{
    Wavenumber z{box.n, box.re_shift};
    RootResult r{z, 0.0, 0};
    bool polish = false;
    for (int it = 1; it <= opt.max_iterations; ++it) {
        r.iterations = it;
        TaylorJet f = char_fn_jet(ctx, z, 1, opt.cauchy);
        if (f[0] == 0.0)
            break;
        if (f[1] == 0.0)
            throw NumericalError("vanishing derivative of F in Newton step at " + n_tag(box.n));
        Complex step = f[0] / f[1];
        z.offset -= step;
        if (!box.contains(z))
            throw NumericalError("Newton iterate left the root box at " + n_tag(box.n));
        double scale = std::max(std::abs(z.offset), 1.0 / std::max(1.0, std::abs(z.value())));
        if (polish)
            break;
        if (std::abs(step) <= 1e-10 * scale)
            polish = true;
        if (it == opt.max_iterations)
            throw NumericalError("Newton iteration did not converge at " + n_tag(box.n));
    }
    r.z = z;
    r.residual = std::abs(char_fn(ctx, z, opt.cauchy));
    if (r.residual > opt.tol * std::max(1.0, std::abs(z.value())))
        throw NumericalError("root residual " + std::to_string(r.residual) + " too large at " +
                             n_tag(box.n));
    return r;
}

int count_roots(const OperatorContext& ctx, const RootBox& box, int min_samples)
{
    CauchyOptions copt;
    copt.tol = 1e-11;
    copt.max_terms = 2000;
    double h = box.im_half;
    double lo = box.re_shift - box.re_half, hi = box.re_shift + box.re_half;
    const Complex corners[4] = {{lo, -h}, {hi, -h}, {hi, h}, {lo, h}};
    int per_edge = std::max(64, (min_samples + 3) / 4);

    auto F = [&](Complex off) { return char_fn(ctx, Wavenumber{box.n, off}, copt); };

    std::vector<Complex> values;
    double fmax = 0.0;
    double total = 0.0;
    // phase change along [a, b] with bisection where it is too large to resolve
    auto segment = [&](auto& self, Complex a, Complex fa, Complex b, Complex fb, int depth) -> void {
        double d = std::arg(fb / fa);
        if (std::abs(d) > kPi / 4 && depth < 12) {
            Complex m = 0.5 * (a + b);
            Complex fm = F(m);
            if (std::abs(fm) == 0.0)
                throw BoundaryZeroError("F vanishes on the box boundary at " + n_tag(box.n));
            self(self, a, fa, m, fm, depth + 1);
            self(self, m, fm, b, fb, depth + 1);
            return;
        }
        total += d;
    };

    std::vector<Complex> pts;
    for (int e = 0; e < 4; ++e)
        for (int k = 0; k < per_edge; ++k)
            pts.push_back(corners[e] + (corners[(e + 1) % 4] - corners[e]) *
                                           (static_cast<double>(k) / per_edge));
    values.reserve(pts.size());
    for (auto p : pts) {
        values.push_back(F(p));
        fmax = std::max(fmax, std::abs(values.back()));
    }
    for (auto v : values)
        if (std::abs(v) <= 1e-10 * fmax)
            throw BoundaryZeroError("F nearly vanishes on the box boundary at " + n_tag(box.n));
    for (std::size_t k = 0; k < pts.size(); ++k) {
        std::size_t j = (k + 1) % pts.size();
        segment(segment, pts[k], values[k], pts[j], values[j], 0);
    }
    double winding = total / (2.0 * kPi);
    double rounded = std::round(winding);
    if (std::abs(winding - rounded) > 0.05)
        throw NumericalError("inconsistent winding number " + std::to_string(winding) + " at " +
                             n_tag(box.n));
    return static_cast<int>(rounded);
}

int count_roots_with_retry(const OperatorContext& ctx, RootBox box, int min_samples)
{
    for (int attempt = 0;; ++attempt) {
        try {
            return count_roots(ctx, box, min_samples);
        } catch (const BoundaryZeroError&) {
            if (attempt == 3)
                throw;
            box.im_half *= 1.5;
        }
    }
}

long find_n_check(const OperatorContext& ctx, long n_max)
{
    double v = ctx.potential_bound();
    for (long n = 1; n <= n_max; ++n) {
        RootBox box = make_box(n, v);
        if (contraction_ratio(box, v) >= 1.0)
            continue;
        if (count_roots_with_retry(ctx, box) == 1)
            return n;
    }
    throw NumericalError("no admissible n found up to n=" + std::to_string(n_max));
}

EigenvalueRecord shooting_eigenvalue(const OperatorContext& ctx, long n, const RootOptions& opt)
{
    RootBox box = make_box(n, ctx.potential_bound());
    RootResult r = find_root(ctx, box, opt);
    EigenvalueRecord rec;
    rec.n = static_cast<int>(n);
    rec.lambda = r.z.squared();
    rec.method = Method::shooting;
    rec.residual = r.residual;
    rec.z = r.z;
    return rec;
}

std::vector<EigenvalueRecord> shooting_eigenvalues(const OperatorContext& ctx, long n_lo, long n_hi,
                                                   unsigned jobs, const RootOptions& opt)
{
    if (n_lo < 1 || n_hi < n_lo)
        throw DomainError("invalid n range");
    return parallel_map(static_cast<std::size_t>(n_hi - n_lo + 1), jobs, [&](std::size_t i) {
        return shooting_eigenvalue(ctx, n_lo + static_cast<long>(i), opt);
    });
}

} // namespace nlspec
