#include "nlspec/cauchy.hpp"

#include <cmath>
#include <string>

namespace nlspec {

namespace {

double max_abs(const JetField& f)
{
    double m = 0.0;
    for (const auto& j : f.values())
        m = std::max(m, j.max_abs());
    return m;
}

[[noreturn]] void diverged(const Wavenumber& z, int terms, double ratio)
{
    throw NumericalError("Neumann series did not converge at z=" + std::to_string(z.value().real()) +
                         (z.value().imag() < 0 ? "" : "+") + std::to_string(z.value().imag()) +
                         "i after " + std::to_string(terms) +
                         " terms (term ratio " + std::to_string(ratio) + ")");
}

// -z sin z as a jet about center
TaylorJet z_sin_z_jet(const Wavenumber& center, int order)
{
    auto cs = cos_sin(center, 1.0);
    TaylorJet s(order);
    for (int m = 0; m <= order; ++m) {
        double f = 1.0;
        for (int k = 2; k <= m; ++k)
            f *= k;
        Complex d;
        switch (m % 4) {
        case 0: d = cs.sin; break;
        case 1: d = cs.cos; break;
        case 2: d = -cs.sin; break;
        default: d = -cs.cos; break;
        }
        s[m] = d / f;
    }
    TaylorJet z = TaylorJet::variable(center.value(), order);
    return -(z * s);
}

} // namespace

CauchySolution solve_cauchy(const OperatorContext& ctx, const Wavenumber& z, const CauchyOptions& opt)
{
    Complex zv = z.value();
    if (zv == 0.0)
        throw DomainError("Cauchy problem needs z != 0");
    const auto& grid = ctx.grid();
    auto trig = trig_table(*grid, z);
    GridFunction term(grid, trig.cos);
    GridFunction phi = term;
    double base = sup_norm(term);
    double threshold = opt.tol * base;
    Complex inv_z = 1.0 / zv;

    CauchySolution out{z, {}, 1, 0.0};
    double prev = base;
    int growing = 0;
    for (;;) {
        term = inv_z * sine_transform(apply_B(ctx, term), trig);
        double norm = sup_norm(term);
        out.last_term_norm = norm;
        if (norm <= threshold)
            break;
        if (out.terms_used >= opt.max_terms)
            diverged(z, out.terms_used, norm / prev);
        growing = norm >= prev ? growing + 1 : 0;
        if (growing >= 5)
            diverged(z, out.terms_used, norm / prev);
        prev = norm;
        auto pv = phi.values();
        for (std::size_t i = 0; i < pv.size(); ++i)
            pv[i] += term[i];
        ++out.terms_used;
    }
    out.phi = std::move(phi);
    return out;
}

CauchySolution solve_cauchy(const OperatorContext& ctx, Complex z, const CauchyOptions& opt)
{
    return solve_cauchy(ctx, Wavenumber::from(z), opt);
}

Complex char_fn(const OperatorContext& ctx, const Wavenumber& z, const CauchyOptions& opt)
{
    auto sol = solve_cauchy(ctx, z, opt);
    auto trig = trig_table(*ctx.grid(), z);
    Complex tail = cosine_transform_at_end(apply_B(ctx, sol.phi), trig);
    return -z.value() * cos_sin(z, 1.0).sin + tail;
}

Complex char_fn(const OperatorContext& ctx, Complex z, const CauchyOptions& opt)
{
    return char_fn(ctx, Wavenumber::from(z), opt);
}

TaylorJet char_fn_jet(const OperatorContext& ctx, const Wavenumber& center, int order,
                      const CauchyOptions& opt)
{
    if (center.value() == 0.0)
        throw DomainError("jet of F needs a nonzero center");
    const auto& grid = ctx.grid();
    auto trig = trig_table(*grid, center, order);
    TaylorJet inv_z = reciprocal(TaylorJet::variable(center.value(), order));

    JetField term(grid, trig.cos);
    std::vector<TaylorJet> acc = trig.cos;
    double threshold = opt.tol * max_abs(term);
    double prev = max_abs(term);
    int terms = 1, growing = 0;
    for (;;) {
        JetField next = sine_transform(apply_B(ctx, term), trig);
        for (auto& v : next.values())
            v = v * inv_z;
        double norm = max_abs(next);
        if (norm <= threshold)
            break;
        if (terms >= opt.max_terms)
            diverged(center, terms, norm / prev);
        growing = norm >= prev ? growing + 1 : 0;
        if (growing >= 5)
            diverged(center, terms, norm / prev);
        prev = norm;
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += next[i];
        term = std::move(next);
        ++terms;
    }
    JetField phi(grid, std::move(acc));
    return z_sin_z_jet(center, order) + cosine_transform_at_end(apply_B(ctx, phi), trig);
}

GridFunction eigenfunction(const OperatorContext& ctx, const Wavenumber& z, double root_tol)
{
    Complex f = char_fn(ctx, z);
    if (std::abs(f) > root_tol * std::max(1.0, std::abs(z.value())))
        throw DomainError("eigenfunction requested at a non-root (|F| = " +
                          std::to_string(std::abs(f)) + ")");
    auto sol = solve_cauchy(ctx, z);
    GridFunction phi = std::move(sol.phi);
    long n = std::lround(z.value().real() / kPi);
    const auto& grid = ctx.grid();
    GridFunction ref = sample(grid, [n](double x) {
        return Complex(n == 0 ? 1.0 : std::sqrt(2.0) * std::cos(kPi * static_cast<double>(n) * x));
    });
    double norm = l2_norm(phi);
    Complex ip = inner_product(phi, ref);
    Complex phase = std::abs(ip) > 0.0 ? std::conj(ip) / std::abs(ip) : Complex(1.0);
    return (phase / norm) * phi;
}

} // namespace nlspec
