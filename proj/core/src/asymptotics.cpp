#include "nlspec/asymptotics.hpp"

#include <cmath>

namespace nlspec {

namespace {

// int_a^b f(t) w(t) dt on the context grid, between nodes at a and b
template <class F>
Complex grid_integral(const OperatorContext& ctx, double a, double b, F&& f)
{
    if (!(b > a))
        return 0.0;
    const auto& g = ctx.grid();
    std::size_t ia = g->node_index(a), ib = g->node_index(b);
    return integrate(sample(g, f), ia, ib);
}

struct Moments {
    Complex v = 0.0;  // int_0^{1-alpha} V
    Complex q = 0.0;  // int_beta^1 Q
};

Moments moments(const OperatorContext& ctx)
{
    Moments m;
    if (ctx.alpha() < 1.0)
        m.v = grid_integral(ctx, 0.0, 1.0 - ctx.alpha(), [&](double t) { return ctx.V().eval(t); });
    if (ctx.beta() < 1.0)
        m.q = grid_integral(ctx, ctx.beta(), 1.0, [&](double t) { return ctx.Q().eval(t); });
    return m;
}

} // namespace

AsymptoticTerms compute_G(const OperatorContext& ctx, long n, bool require_lambda2)
{
    if (n < 1)
        throw DomainError("asymptotics need n >= 1");
    const double a = ctx.alpha(), b = ctx.beta();
    const double w = kPi * static_cast<double>(n);
    const bool v_on = a < 1.0, q_on = b < 1.0;
    const Potential& V = ctx.V();
    const Potential& Q = ctx.Q();

    Moments m = moments(ctx);
    double ca = std::cos(w * a), sa = std::sin(w * a);
    double cb = std::cos(w * b), sb = std::sin(w * b);
    Complex v_end = v_on ? V.eval(1.0 - a) + V.eval(0.0) : 0.0;
    Complex q_end = q_on ? Q.eval(1.0) + Q.eval(b) : 0.0;
    Complex v_right = v_on ? V.eval(1.0 - a) : 0.0;

    AsymptoticTerms r;
    r.n = n;
    auto& G = r.G;
    G[0] = ca * m.v + cb * m.q;
    G[1] = (a + 1.0) * sa * m.v + (b - 1.0) * sb * m.q;
    G[2] = (a + 1.0) * (a + 1.0) * ca * m.v + (b - 1.0) * (b - 1.0) * cb * m.q;
    G[3] = -v_end * sa - q_end * sb;
    G[4] = (a - 1.0) * v_end * ca + (b - 1.0) * q_end * cb;
    G[5] = v_right * (-sa * m.v + sb * m.q) * sa;
    r.Lambda1 = G[3] - G[0] * G[1];

    bool smooth = V.derivative_order_available() >= 2 && Q.derivative_order_available() >= 2;
    if (!smooth) {
        if (require_lambda2)
            throw DomainError("four-term asymptotics need potentials with two derivatives");
        return r;
    }
    Complex boundary = 0.0, curvature = 0.0;
    if (v_on) {
        boundary += (V.eval(1.0 - a, 1) - V.eval(0.0, 1)) * ca;
        curvature -= grid_integral(ctx, 0.0, 1.0 - a, [&](double t) {
            return V.eval(t, 2) * std::cos(w * (2.0 * t + a));
        });
    }
    if (q_on) {
        boundary += (Q.eval(1.0, 1) - Q.eval(b, 1)) * cb;
        curvature -= grid_integral(ctx, b, 1.0, [&](double t) {
            return Q.eval(t, 2) * std::cos(w * (2.0 * t - b));
        });
    }
    r.Lambda2 = G[0] * G[0] * G[0] / 6.0 + G[0] * G[1] * G[1] - G[2] * G[0] * G[0] / 2.0 -
                2.0 * G[0] * G[0] - G[0] * G[4] - G[1] * G[3] + 4.0 * G[5] + boundary + curvature;
    r.has_lambda2 = true;
    return r;
}

EigenvalueRecord lambda_two_term(const OperatorContext& ctx, long n)
{
    if (n < 1)
        throw DomainError("asymptotics need n >= 1");
    const double a = ctx.alpha(), b = ctx.beta();
    const double w = kPi * static_cast<double>(n);
    Complex corr = 0.0;
    if (a < 1.0)
        corr += grid_integral(ctx, 0.0, 1.0 - a, [&](double t) {
            return ctx.V().eval(t) * std::cos(w * t) * std::cos(w * (t + a));
        });
    if (b < 1.0)
        corr += grid_integral(ctx, b, 1.0, [&](double t) {
            return ctx.Q().eval(t) * std::cos(w * t) * std::cos(w * (t - b));
        });
    EigenvalueRecord rec;
    rec.n = static_cast<int>(n);
    rec.method = Method::asymptotic2;
    rec.lambda = w * w + 2.0 * corr;
    return rec;
}

EigenvalueRecord lambda_four_term(const OperatorContext& ctx, long n)
{
    AsymptoticTerms t = compute_G(ctx, n, true);
    const double w = kPi * static_cast<double>(n);
    EigenvalueRecord rec;
    rec.n = static_cast<int>(n);
    rec.method = Method::asymptotic4;
    rec.lambda = w * w + t.G[0] + t.Lambda1 / (2.0 * w) + t.Lambda2 / (4.0 * w * w);
    return rec;
}

std::vector<Complex> gamma_curve(const OperatorContext& ctx, std::span<const double> t)
{
    Moments m = moments(ctx);
    std::vector<Complex> out;
    out.reserve(t.size());
    for (double s : t)
        out.push_back(s * s + m.v * std::cos(s * ctx.alpha()) + m.q * std::cos(s * ctx.beta()));
    return out;
}

} // namespace nlspec
