#include <doctest.h>

#include <nlspec/grid.hpp>

#include <cmath>

using namespace nlspec;

TEST_CASE("alpha = beta = 1 gives the plain uniform grid")
{
    auto g = make_grid(1.0, 1.0, 16);
    CHECK(g->size() == 17);
    CHECK(g->is_uniform());
    CHECK((*g)[0] == 0.0);
    CHECK((*g)[g->last()] == 1.0);
}

TEST_CASE("breakpoints are nodes")
{
    auto g = make_grid(0.5, 0.25, 16);
    CHECK(g->find_node(0.5).has_value());
    CHECK(g->find_node(0.25).has_value());
    auto h = make_grid(0.3, 0.7, 4096);
    CHECK(h->is_uniform());
    CHECK(h->size() == 4101);
    CHECK(h->find_node(0.7).has_value());
}

TEST_CASE("irrational shifts give a piecewise grid with bounded spacing")
{
    double a = 1.0 / std::sqrt(2.0), b = kPi / 10.0;
    auto g = make_grid(a, b, 1000);
    CHECK(g->find_node(1.0 - a, 1e-15).has_value());
    CHECK(g->find_node(b, 1e-15).has_value());
    CHECK(g->step() <= 2.0 / 1000);
    CHECK(g->intervals() >= 1000);
    auto nodes = g->nodes();
    for (std::size_t i = 1; i < nodes.size(); ++i)
        REQUIRE(nodes[i] > nodes[i - 1]);
    auto s = make_grid(0.3, 0.0, 1000);
    CHECK(s->step() <= 2.0 / 1000);
}

TEST_CASE("invalid grid requests")
{
    CHECK_THROWS_AS(make_grid(1.5, 0.5, 64), DomainError);
    CHECK_THROWS_AS(make_grid(0.5, -0.1, 64), DomainError);
    CHECK_THROWS_AS(make_grid(0.5, 0.5, 8), DomainError);
    CHECK_THROWS_AS(Grid({0.0, 0.5, 0.4, 1.0}), DomainError);
}

TEST_CASE("node counts are deterministic and symmetric")
{
    auto a = make_grid(0.37, 0.61, 512);
    auto b = make_grid(0.37, 0.61, 512);
    CHECK(a->size() == b->size());
    auto c = make_grid(0.61, 0.37, 512);
    CHECK(c->find_node(0.37).has_value());
    CHECK(c->find_node(1 - 0.61).has_value());
}

TEST_CASE("trapezoid integrals")
{
    auto g = make_grid(0.3, 0.7, 4096);
    CHECK(std::abs(integrate(sample(g, [](double) { return Complex(1.0); })) - 1.0) < 1e-14);
    CHECK(std::abs(integrate(sample(g, [](double x) { return Complex(x); })) - 0.5) < 1e-14);
    auto c = sample(g, [](double x) { return Complex(std::cos(2 * kPi * x)); });
    CHECK(std::abs(integrate(c)) < 1e-6);
    auto e = sample(g, [](double x) { return Complex(std::exp(x)); });
    double err = std::abs(integrate(e) - (std::exp(1.0) - 1.0));
    CHECK(err < 1e-7);
    auto g2 = make_grid(0.3, 0.7, 8192);
    auto e2 = sample(g2, [](double x) { return Complex(std::exp(x)); });
    CHECK(std::abs(integrate(e2) - (std::exp(1.0) - 1.0)) * 3 < err);
}

TEST_CASE("integrals are additive and linear")
{
    auto g = make_grid(0.3, 0.7, 512);
    auto f = sample(g, [](double x) { return Complex(std::sin(3 * x), x * x); });
    auto h = sample(g, [](double x) { return Complex(std::exp(-x)); });
    std::size_t m = g->node_index(0.7);
    Complex whole = integrate(f);
    CHECK(std::abs(integrate(f, 0, m) + integrate(f, m, g->last()) - whole) < 1e-15);
    Complex lin = integrate(Complex(2, 1) * f + h);
    CHECK(std::abs(lin - (Complex(2, 1) * whole + integrate(h))) < 1e-14);
}

TEST_CASE("one-sided limits are honoured by the trapezoid rule")
{
    auto g = make_uniform_grid(4);
    // step function: 1 on [0, 0.5), 0 on (0.5, 1]
    GridFunction f(g, {1.0, 1.0, 1.0, 0.0, 0.0}, {{2, 1.0, 0.0}});
    CHECK(std::abs(integrate(f) - 0.5) < 1e-15);
    CHECK(f.left_limit(2) == Complex(1.0));
    CHECK(f.right_limit(2) == Complex(0.0));
    GridFunction s = f + f;
    CHECK(std::abs(integrate(s) - 1.0) < 1e-15);
}

TEST_CASE("norms and inner products")
{
    auto g = make_uniform_grid(4096);
    auto c = sample(g, [](double x) { return Complex(std::sqrt(2.0) * std::cos(3 * kPi * x)); });
    CHECK(std::abs(l2_norm(c) - 1.0) < 1e-12);
    CHECK(std::abs(sup_norm(c) - std::sqrt(2.0)) < 1e-12);
    auto i = Complex(0, 1) * c;
    CHECK(std::abs(inner_product(i, c) - Complex(0, 1)) < 1e-12);
    CHECK_THROWS_AS(c + sample(make_uniform_grid(16), [](double) { return Complex(0); }),
                    DomainError);
}
