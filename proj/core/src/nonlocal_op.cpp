#include "nlspec/nonlocal_op.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

namespace nlspec {

namespace {

constexpr double kShiftTol = 1e-9;

std::vector<OperatorContext::Tap> make_taps(const Grid& g, std::size_t first, std::size_t last,
                                            double shift)
{
    std::vector<OperatorContext::Tap> taps;
    taps.reserve(last - first + 1);
    double h = g.step();
    double steps = shift / h;
    bool aligned = g.is_uniform() &&
                   std::abs(steps - std::round(steps)) <= kShiftTol * std::max(1.0, std::abs(steps));
    auto k = static_cast<long>(std::lround(steps));
    for (std::size_t i = first; i <= last; ++i) {
        if (aligned) {
            taps.push_back({static_cast<std::size_t>(static_cast<long>(i) + k), 0.0});
            continue;
        }
        double x = std::clamp(g[i] + shift, 0.0, 1.0);
        std::size_t s = g.locate(x);
        if (s == g.last()) {
            taps.push_back({s, 0.0});
            continue;
        }
        double w = (x - g[s]) / (g[s + 1] - g[s]);
        if (w < 1e-12)
            w = 0.0;
        taps.push_back({s, w});
    }
    return taps;
}

template <class T>
T tap(std::span<const T> u, const OperatorContext::Tap& t)
{
    if (t.weight == 0.0)
        return u[t.source];
    T r = u[t.source];
    r *= 1.0 - t.weight;
    T s = u[t.source + 1];
    s *= t.weight;
    r += s;
    return r;
}

template <class T>
T zero_like(const T& v)
{
    if constexpr (std::is_same_v<T, TaylorJet>)
        return TaylorJet(v.order());
    else
        return T{};
}

template <class T>
GridField<T> apply_B_impl(const OperatorContext& ctx, const GridField<T>& u)
{
    require_same_grid(ctx.grid(), u.grid());
    const Grid& g = *ctx.grid();
    std::size_t n = g.size();
    auto uv = u.values();
    T zero = zero_like(uv[0]);
    std::vector<T> out(n, zero);
    std::vector<T> vpart, qpart;

    if (ctx.has_v_part()) {
        auto taps = ctx.v_taps();
        auto vn = ctx.v_nodes();
        for (std::size_t i = 0; i <= ctx.v_end(); ++i) {
            T term = tap(uv, taps[i]);
            term *= vn[i];
            out[i] += term;
        }
    }
    if (ctx.has_q_part()) {
        auto taps = ctx.q_taps();
        auto qn = ctx.q_nodes();
        std::size_t first = ctx.q_start();
        for (std::size_t i = first; i < n; ++i) {
            T term = tap(uv, taps[i - first]);
            term *= qn[i];
            out[i] += term;
        }
    }

    // one-sided limits where a part switches on or off
    std::vector<OneSidedLimits<T>> jumps;
    auto add_jump = [&](std::size_t k) {
        for (const auto& j : jumps)
            if (j.index == k)
                return;
        T left = zero, right = zero;
        if (ctx.has_v_part()) {
            T term = tap(uv, ctx.v_taps()[std::min(k, ctx.v_end())]);
            term *= ctx.v_nodes()[k];
            if (k <= ctx.v_end() && k > 0)
                left += term;
            if (k < ctx.v_end())
                right += term;
        }
        if (ctx.has_q_part() && k >= ctx.q_start()) {
            T term = tap(uv, ctx.q_taps()[k - ctx.q_start()]);
            term *= ctx.q_nodes()[k];
            if (k > ctx.q_start())
                left += term;
            right += term;
        }
        jumps.push_back({k, left, right});
    };
    if (ctx.has_v_part() && ctx.v_end() < g.last())
        add_jump(ctx.v_end());
    if (ctx.has_q_part() && ctx.q_start() > 0)
        add_jump(ctx.q_start());
    return GridField<T>(ctx.grid(), std::move(out), std::move(jumps));
}

template <class T>
void mul_into(T& acc, const T& a, const T& b)
{
    if constexpr (std::is_same_v<T, TaylorJet>)
        fma_into(acc, a, b);
    else
        acc += a * b;
}

// C(x_k) = int_0^{x_k} g cos(z t), S(x_k) = int_0^{x_k} g sin(z t); calls emit(k, C, S)
template <class T, class Emit>
void cumulative_moments(const GridField<T>& g, const TrigTable<T>& trig, Emit&& emit)
{
    const Grid& x = *g.grid();
    T zero = zero_like(g[0]);
    T C = zero, S = zero;
    emit(std::size_t{0}, C, S);
    T prev_c = zero, prev_s = zero;
    mul_into(prev_c, g.right_limit(0), trig.cos[0]);
    mul_into(prev_s, g.right_limit(0), trig.sin[0]);
    for (std::size_t k = 1; k < x.size(); ++k) {
        double w = 0.5 * (x[k] - x[k - 1]);
        const T& gl = g.left_limit(k);
        T cur_c = zero, cur_s = zero;
        mul_into(cur_c, gl, trig.cos[k]);
        mul_into(cur_s, gl, trig.sin[k]);
        prev_c += cur_c;
        prev_s += cur_s;
        prev_c *= w;
        prev_s *= w;
        C += prev_c;
        S += prev_s;
        emit(k, C, S);
        const T& gr = g.right_limit(k);
        if (&gr != &gl) {
            cur_c = zero;
            cur_s = zero;
            mul_into(cur_c, gr, trig.cos[k]);
            mul_into(cur_s, gr, trig.sin[k]);
        }
        prev_c = cur_c;
        prev_s = cur_s;
    }
}

} // namespace

OperatorContext::OperatorContext(Potential V, Potential Q, double alpha, double beta, GridPtr grid)
    : V_(std::move(V)), Q_(std::move(Q)), alpha_(alpha), beta_(beta), grid_(std::move(grid))
{
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw DomainError("alpha out of [0,1]");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw DomainError("beta out of [0,1]");
    if (!grid_)
        throw DomainError("operator context needs a grid");
    const Grid& g = *grid_;
    bound_ = V_.sup_norm() + Q_.sup_norm();

    if (alpha < 1.0) {
        auto k = g.find_node(1.0 - alpha);
        if (!k)
            throw DomainError("grid must contain 1 - alpha as a node");
        v_end_ = *k;
        v_nodes_.resize(g.size());
        for (std::size_t i = 0; i <= *k; ++i)
            v_nodes_[i] = V_.eval(g[i]);
        v_taps_ = make_taps(g, 0, *k, alpha);
    }
    if (beta < 1.0) {
        auto k = g.find_node(beta);
        if (!k)
            throw DomainError("grid must contain beta as a node");
        q_start_ = *k;
        q_nodes_.resize(g.size());
        for (std::size_t i = *k; i < g.size(); ++i)
            q_nodes_[i] = Q_.eval(g[i]);
        q_taps_ = make_taps(g, *k, g.last(), -beta);
    }
}

OperatorContext::OperatorContext(Potential V, Potential Q, double alpha, double beta, int resolution)
    : OperatorContext(std::move(V), std::move(Q), alpha, beta, make_grid(alpha, beta, resolution))
{
}

TrigTable<Complex> trig_table(const Grid& grid, const Wavenumber& z)
{
    TrigTable<Complex> t;
    t.cos.resize(grid.size());
    t.sin.resize(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        auto cs = cos_sin(z, grid[k]);
        t.cos[k] = cs.cos;
        t.sin[k] = cs.sin;
    }
    return t;
}

TrigTable<TaylorJet> trig_table(const Grid& grid, const Wavenumber& center, int order)
{
    TrigTable<TaylorJet> t;
    t.cos.assign(grid.size(), TaylorJet(order));
    t.sin.assign(grid.size(), TaylorJet(order));
    for (std::size_t k = 0; k < grid.size(); ++k) {
        double x = grid[k];
        auto cs = cos_sin(center, x);
        // d^m/dz^m cos(z x) = x^m cos(z x + m pi/2)
        double scale = 1.0;
        for (int m = 0; m <= order; ++m) {
            if (m > 0)
                scale *= x / m;
            Complex c, s;
            switch (m % 4) {
            case 0: c = cs.cos; s = cs.sin; break;
            case 1: c = -cs.sin; s = cs.cos; break;
            case 2: c = -cs.cos; s = -cs.sin; break;
            default: c = cs.sin; s = -cs.cos; break;
            }
            t.cos[k][m] = scale * c;
            t.sin[k][m] = scale * s;
        }
    }
    return t;
}

GridFunction apply_B(const OperatorContext& ctx, const GridFunction& u)
{
    return apply_B_impl(ctx, u);
}

JetField apply_B(const OperatorContext& ctx, const JetField& u)
{
    return apply_B_impl(ctx, u);
}

template <class T>
GridField<T> sine_transform(const GridField<T>& g, const TrigTable<T>& trig)
{
    std::vector<T> out(g.size(), zero_like(g[0]));
    cumulative_moments(g, trig, [&](std::size_t k, const T& C, const T& S) {
        // sin z(x-t) = sin zx cos zt - cos zx sin zt
        mul_into(out[k], trig.sin[k], C);
        T tmp = zero_like(C);
        mul_into(tmp, trig.cos[k], S);
        out[k] -= tmp;
    });
    return GridField<T>(g.grid(), std::move(out));
}

template <class T>
GridField<T> cosine_transform(const GridField<T>& g, const TrigTable<T>& trig)
{
    std::vector<T> out(g.size(), zero_like(g[0]));
    cumulative_moments(g, trig, [&](std::size_t k, const T& C, const T& S) {
        mul_into(out[k], trig.cos[k], C);
        mul_into(out[k], trig.sin[k], S);
    });
    return GridField<T>(g.grid(), std::move(out));
}

template <class T>
T cosine_transform_at_end(const GridField<T>& g, const TrigTable<T>& trig)
{
    std::size_t last = g.grid()->last();
    T out = zero_like(g[0]);
    cumulative_moments(g, trig, [&](std::size_t k, const T& C, const T& S) {
        if (k != last)
            return;
        mul_into(out, trig.cos[k], C);
        mul_into(out, trig.sin[k], S);
    });
    return out;
}

template GridField<Complex> sine_transform(const GridField<Complex>&, const TrigTable<Complex>&);
template GridField<TaylorJet> sine_transform(const GridField<TaylorJet>&, const TrigTable<TaylorJet>&);
template GridField<Complex> cosine_transform(const GridField<Complex>&, const TrigTable<Complex>&);
template GridField<TaylorJet> cosine_transform(const GridField<TaylorJet>&,
                                               const TrigTable<TaylorJet>&);
template Complex cosine_transform_at_end(const GridField<Complex>&, const TrigTable<Complex>&);
template TaylorJet cosine_transform_at_end(const GridField<TaylorJet>&, const TrigTable<TaylorJet>&);

GridFunction apply_M(const OperatorContext& ctx, const Wavenumber& z, const GridFunction& u)
{
    return sine_transform(apply_B(ctx, u), trig_table(*ctx.grid(), z));
}

GridFunction apply_M(const OperatorContext& ctx, Complex z, const GridFunction& u)
{
    return apply_M(ctx, Wavenumber::from(z), u);
}

GridFunction apply_L(const OperatorContext& ctx, const Wavenumber& z, const GridFunction& u)
{
    return cosine_transform(apply_B(ctx, u), trig_table(*ctx.grid(), z));
}

GridFunction apply_L(const OperatorContext& ctx, Complex z, const GridFunction& u)
{
    return apply_L(ctx, Wavenumber::from(z), u);
}

namespace {
void require_order(const JetField& u, int order)
{
    if (u.size() > 0 && u[0].order() != order)
        throw DomainError("jet order of the input does not match the requested order");
}
} // namespace

JetField apply_M_jet(const OperatorContext& ctx, const Wavenumber& center, int order,
                     const JetField& u)
{
    require_order(u, order);
    return sine_transform(apply_B(ctx, u), trig_table(*ctx.grid(), center, order));
}

JetField apply_L_jet(const OperatorContext& ctx, const Wavenumber& center, int order,
                     const JetField& u)
{
    require_order(u, order);
    return cosine_transform(apply_B(ctx, u), trig_table(*ctx.grid(), center, order));
}

} // namespace nlspec
