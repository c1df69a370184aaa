#pragma once

#include "nlspec/types.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace nlspec {

/// Ordered nodes on [0,1] with 0 and 1 included.
class Grid {
public:
    /// nodes strictly ascending from 0 to 1
    explicit Grid(std::vector<double> nodes);

    std::span<const double> nodes() const { return nodes_; }
    double operator[](std::size_t i) const { return nodes_[i]; }
    std::size_t size() const { return nodes_.size(); }
    std::size_t intervals() const { return nodes_.size() - 1; }
    std::size_t last() const { return nodes_.size() - 1; }

    bool is_uniform() const { return uniform_; }
    /// Largest node spacing.
    double step() const { return step_; }

    /// Index of the node at x (within tol), if there is one.
    std::optional<std::size_t> find_node(double x, double tol = 1e-11) const;
    /// Index of the node at x; throws DomainError when x is not a node.
    std::size_t node_index(double x) const;
    /// Largest i with nodes[i] <= x.
    std::size_t locate(double x) const;

private:
    std::vector<double> nodes_;
    bool uniform_ = false;
    double step_ = 0.0;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Grid containing 0, 1, beta and 1-alpha as nodes.
/// Uses a uniform grid when one with between resolution and 2*resolution intervals
/// puts alpha and beta on whole steps; otherwise each of the sub-intervals cut at
/// beta and 1-alpha is uniformly split with about resolution intervals per unit length.
GridPtr make_grid(double alpha, double beta, int resolution = kDefaultResolution);

/// Uniform grid with the given number of intervals.
GridPtr make_uniform_grid(std::size_t intervals);

template <class T>
struct OneSidedLimits {
    std::size_t index;
    T left;
    T right;
};

/// Values at grid nodes, plus left and right limits at jump nodes.
/// The stored value at a jump node is the pointwise value.
template <class T>
class GridField {
public:
    GridField() = default;
    GridField(GridPtr grid, std::vector<T> values, std::vector<OneSidedLimits<T>> jumps = {})
        : grid_(std::move(grid)), values_(std::move(values)), jumps_(std::move(jumps))
    {
        if (!grid_ || values_.size() != grid_->size())
            throw DomainError("grid field size does not match its grid");
    }

    const GridPtr& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    const T& operator[](std::size_t i) const { return values_[i]; }
    T& operator[](std::size_t i) { return values_[i]; }
    std::span<const T> values() const { return values_; }
    std::span<T> values() { return values_; }
    std::span<const OneSidedLimits<T>> jumps() const { return jumps_; }

    const T& left_limit(std::size_t i) const
    {
        for (const auto& j : jumps_)
            if (j.index == i)
                return j.left;
        return values_[i];
    }
    const T& right_limit(std::size_t i) const
    {
        for (const auto& j : jumps_)
            if (j.index == i)
                return j.right;
        return values_[i];
    }

private:
    GridPtr grid_;
    std::vector<T> values_;
    std::vector<OneSidedLimits<T>> jumps_;
};

using GridFunction = GridField<Complex>;

void require_same_grid(const GridPtr& a, const GridPtr& b);

/// Samples f(x) at every node.
template <class F>
GridFunction sample(const GridPtr& grid, F&& f)
{
    std::vector<Complex> v(grid->size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = f((*grid)[i]);
    return GridFunction(grid, std::move(v));
}

/// Trapezoid integral of f between nodes a <= b, honouring one-sided limits.
Complex integrate(const GridFunction& f, std::size_t a, std::size_t b);
Complex integrate(const GridFunction& f);

double sup_norm(const GridFunction& f);
/// Trapezoid L2(0,1) norm.
double l2_norm(const GridFunction& f);
/// Trapezoid approximation of the integral of f * conj(g).
Complex inner_product(const GridFunction& f, const GridFunction& g);

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(Complex s, const GridFunction& a);

} // namespace nlspec
