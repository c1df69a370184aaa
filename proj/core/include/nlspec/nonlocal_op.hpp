#pragma once

#include "nlspec/grid.hpp"
#include "nlspec/jet.hpp"
#include "nlspec/potential.hpp"
#include "nlspec/wavenumber.hpp"

#include <optional>

namespace nlspec {

using JetField = GridField<TaylorJet>;

/// Coefficients, shifts and grid for the perturbation
///   (B u)(x) = V(x) u(x + alpha) + Q(x) u(x - beta),
/// with u extended by zero outside [0,1]. alpha = 1 (beta = 1) switches the
/// V (Q) part off entirely.
class OperatorContext {
public:
    struct Tap {
        std::size_t source;  // u(x + shift) ~ (1 - weight) u[source] + weight u[source + 1]
        double weight;
    };

    OperatorContext(Potential V, Potential Q, double alpha, double beta, GridPtr grid);
    OperatorContext(Potential V, Potential Q, double alpha, double beta,
                    int resolution = kDefaultResolution);

    const Potential& V() const { return V_; }
    const Potential& Q() const { return Q_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    const GridPtr& grid() const { return grid_; }

    /// ||V||_inf + ||Q||_inf
    double potential_bound() const { return bound_; }

    bool has_v_part() const { return v_end_.has_value(); }
    bool has_q_part() const { return q_start_.has_value(); }
    /// Node index of 1 - alpha (last node where the V part is on).
    std::size_t v_end() const { return *v_end_; }
    /// Node index of beta (first node where the Q part is on).
    std::size_t q_start() const { return *q_start_; }

    std::span<const Complex> v_nodes() const { return v_nodes_; }
    std::span<const Complex> q_nodes() const { return q_nodes_; }
    std::span<const Tap> v_taps() const { return v_taps_; }
    std::span<const Tap> q_taps() const { return q_taps_; }

private:
    Potential V_, Q_;
    double alpha_ = 0.0, beta_ = 0.0;
    GridPtr grid_;
    double bound_ = 0.0;
    std::optional<std::size_t> v_end_, q_start_;
    std::vector<Complex> v_nodes_, q_nodes_;
    std::vector<Tap> v_taps_, q_taps_;
};

/// cos(z x_k) and sin(z x_k) at every node, as numbers or as jets in z.
template <class T>
struct TrigTable {
    std::vector<T> cos;
    std::vector<T> sin;
};

TrigTable<Complex> trig_table(const Grid& grid, const Wavenumber& z);
/// Jets in the increment of z about center, truncated at order.
TrigTable<TaylorJet> trig_table(const Grid& grid, const Wavenumber& center, int order);

GridFunction apply_B(const OperatorContext& ctx, const GridFunction& u);
JetField apply_B(const OperatorContext& ctx, const JetField& u);

/// x -> int_0^x g(t) sin z(x - t) dt by the cumulative trapezoid rule.
template <class T>
GridField<T> sine_transform(const GridField<T>& g, const TrigTable<T>& trig);
/// x -> int_0^x g(t) cos z(x - t) dt by the cumulative trapezoid rule.
template <class T>
GridField<T> cosine_transform(const GridField<T>& g, const TrigTable<T>& trig);
/// int_0^1 g(t) cos z(1 - t) dt
template <class T>
T cosine_transform_at_end(const GridField<T>& g, const TrigTable<T>& trig);

/// (M u)(x) = int_0^x (B u)(t) sin z(x - t) dt
GridFunction apply_M(const OperatorContext& ctx, const Wavenumber& z, const GridFunction& u);
GridFunction apply_M(const OperatorContext& ctx, Complex z, const GridFunction& u);
/// (L u)(x) = int_0^x (B u)(t) cos z(x - t) dt
GridFunction apply_L(const OperatorContext& ctx, const Wavenumber& z, const GridFunction& u);
GridFunction apply_L(const OperatorContext& ctx, Complex z, const GridFunction& u);

/// Jet versions: u holds jets in the increment of z about center.
JetField apply_M_jet(const OperatorContext& ctx, const Wavenumber& center, int order,
                     const JetField& u);
JetField apply_L_jet(const OperatorContext& ctx, const Wavenumber& center, int order,
                     const JetField& u);

} // namespace nlspec
