#include "nlspec/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nlspec {

namespace {

constexpr double kAlignTol = 1e-9;

bool whole(double v)
{
    return std::abs(v - std::round(v)) <= kAlignTol * std::max(1.0, std::abs(v));
}

} // namespace

Grid::Grid(std::vector<double> nodes) : nodes_(std::move(nodes))
{
    if (nodes_.size() < 2 || nodes_.front() != 0.0 || nodes_.back() != 1.0)
        throw DomainError("grid must contain 0 and 1 and at least one interval");
    double lo = 1.0;
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        double h = nodes_[i] - nodes_[i - 1];
        if (!(h > 0.0))
            throw DomainError("grid nodes must be strictly ascending");
        lo = std::min(lo, h);
        step_ = std::max(step_, h);
    }
    uniform_ = step_ - lo <= 1e-12 * step_;
}

std::optional<std::size_t> Grid::find_node(double x, double tol) const
{
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x - tol);
    if (it != nodes_.end() && std::abs(*it - x) <= tol)
        return static_cast<std::size_t>(it - nodes_.begin());
    return std::nullopt;
}

std::size_t Grid::node_index(double x) const
{
    auto k = find_node(x);
    if (!k)
        throw DomainError("x=" + std::to_string(x) + " is not a grid node");
    return *k;
}

std::size_t Grid::locate(double x) const
{
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    if (it == nodes_.begin())
        return 0;
    return std::min(static_cast<std::size_t>(it - nodes_.begin()) - 1, last());
}

GridPtr make_uniform_grid(std::size_t intervals)
{
    if (intervals == 0)
        throw DomainError("grid needs at least one interval");
    std::vector<double> x(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i)
        x[i] = static_cast<double>(i) / static_cast<double>(intervals);
    x.back() = 1.0;
    return std::make_shared<const Grid>(std::move(x));
}

GridPtr make_grid(double alpha, double beta, int resolution)
{
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw DomainError("alpha out of [0,1]");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw DomainError("beta out of [0,1]");
    if (resolution < 16)
        throw DomainError("grid resolution must be at least 16");

    for (int n = resolution; n < 2 * resolution; ++n)
        if (whole(n * alpha) && whole(n * beta))
            return make_uniform_grid(static_cast<std::size_t>(n));

    std::vector<double> cuts{0.0, 1.0};
    for (double c : {beta, 1.0 - alpha})
        if (c > 0.0 && c < 1.0)
            cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               cuts.end());

    std::vector<double> x{0.0};
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        double a = cuts[s], b = cuts[s + 1];
        auto m = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) * resolution - 1e-9)));
        for (std::size_t i = 1; i < m; ++i)
            x.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(m));
        x.push_back(b);
    }
    x.back() = 1.0;
    return std::make_shared<const Grid>(std::move(x));
}

void require_same_grid(const GridPtr& a, const GridPtr& b)
{
    if (a == b)
        return;
    if (!a || !b || a->size() != b->size() ||
        !std::equal(a->nodes().begin(), a->nodes().end(), b->nodes().begin()))
        throw DomainError("grid mismatch");
}

Complex integrate(const GridFunction& f, std::size_t a, std::size_t b)
{
    const Grid& g = *f.grid();
    if (a > b || b > g.last())
        throw DomainError("integration bounds out of grid range");
    Complex s = 0.0;
    for (std::size_t i = a; i < b; ++i)
        s += 0.5 * (g[i + 1] - g[i]) * (f.right_limit(i) + f.left_limit(i + 1));
    return s;
}

Complex integrate(const GridFunction& f)
{
    return integrate(f, 0, f.grid()->last());
}

double sup_norm(const GridFunction& f)
{
    double m = 0.0;
    for (auto v : f.values())
        m = std::max(m, std::abs(v));
    for (const auto& j : f.jumps())
        m = std::max({m, std::abs(j.left), std::abs(j.right)});
    return m;
}

Complex inner_product(const GridFunction& f, const GridFunction& g)
{
    require_same_grid(f.grid(), g.grid());
    const Grid& x = *f.grid();
    Complex s = 0.0;
    for (std::size_t i = 0; i < x.last(); ++i)
        s += 0.5 * (x[i + 1] - x[i]) *
             (f.right_limit(i) * std::conj(g.right_limit(i)) +
              f.left_limit(i + 1) * std::conj(g.left_limit(i + 1)));
    return s;
}

double l2_norm(const GridFunction& f)
{
    return std::sqrt(std::max(0.0, inner_product(f, f).real()));
}

GridFunction operator+(const GridFunction& a, const GridFunction& b)
{
    require_same_grid(a.grid(), b.grid());
    std::vector<Complex> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a[i] + b[i];
    std::vector<std::size_t> at;
    for (const auto& e : a.jumps())
        at.push_back(e.index);
    for (const auto& e : b.jumps())
        at.push_back(e.index);
    std::sort(at.begin(), at.end());
    at.erase(std::unique(at.begin(), at.end()), at.end());
    std::vector<OneSidedLimits<Complex>> j;
    for (auto k : at)
        j.push_back({k, a.left_limit(k) + b.left_limit(k), a.right_limit(k) + b.right_limit(k)});
    return GridFunction(a.grid(), std::move(v), std::move(j));
}

GridFunction operator-(const GridFunction& a, const GridFunction& b)
{
    return a + Complex(-1.0) * b;
}

GridFunction operator*(Complex s, const GridFunction& a)
{
    std::vector<Complex> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = s * a[i];
    std::vector<OneSidedLimits<Complex>> j;
    for (const auto& e : a.jumps())
        j.push_back({e.index, s * e.left, s * e.right});
    return GridFunction(a.grid(), std::move(v), std::move(j));
}

} // namespace nlspec
