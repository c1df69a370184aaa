#include <doctest.h>

#include <nlspec/galerkin.hpp>

#include <cmath>

using namespace nlspec;

TEST_CASE("free operator is diagonal")
{
    OperatorContext ctx(Potential(), Potential(), 0.3, 0.7, 256);
    auto A = assemble(ctx, 16);
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c)
            CHECK(std::abs(A(r, c) - (r == c ? kPi * kPi * r * r : 0.0)) <= 1e-15 * (1 + r * r * 10));
    auto recs = galerkin_eigenvalues(OperatorContext(Potential(), Potential(), 0.3, 0.7, 256), 64, 15);
    for (int n = 0; n <= 15; ++n) {
        CHECK(recs[n].n == n);
        CHECK(std::abs(recs[n].lambda - kPi * kPi * n * n) < 1e-10);
    }
}

TEST_CASE("full shifts are diagonal for any potentials")
{
    auto V = Potential::constant({1.0, 2.0}) + Potential::trigonometric(0.5, 3);
    OperatorContext ctx(V, V, 1.0, 1.0, 256);
    auto A = assemble(ctx, 12);
    for (int r = 0; r < 12; ++r)
        for (int c = 0; c < 12; ++c)
            if (r != c)
                CHECK(A(r, c) == Complex(0.0));
}

TEST_CASE("entries of a constant potential")
{
    for (double a : {0.0, 0.3, 0.5}) {
        OperatorContext ctx(Potential::constant(1.0), Potential(), a, 1.0, 256);
        auto A = assemble(ctx, 8);
        CHECK(std::abs(A(0, 0) - (1.0 - a)) < 1e-12);
        // <B psi_0, psi_2> = sqrt 2 int_0^{1-a} cos(2 pi x) dx
        double want = std::sqrt(2.0) * std::sin(2 * kPi * (1 - a)) / (2 * kPi);
        CHECK(std::abs(A(2, 0) - want) < 1e-12);
    }
}

TEST_CASE("dense eigenvalues of small matrices")
{
    DenseMatrix I(3);
    for (int i = 0; i < 3; ++i)
        I(i, i) = 1.0;
    for (auto v : dense_eigs(I))
        CHECK(std::abs(v - 1.0) < 1e-14);
    DenseMatrix D(3);
    D(0, 0) = 3.0;
    D(1, 1) = 1.0;
    D(2, 2) = 2.0;
    auto d = dense_eigs(D);
    CHECK(std::abs(d[0] - 1.0) < 1e-14);
    CHECK(std::abs(d[1] - 2.0) < 1e-14);
    CHECK(std::abs(d[2] - 3.0) < 1e-14);
    DenseMatrix C(2);  // companion matrix of z^2 - 3z + 2
    C(0, 1) = 1.0;
    C(1, 0) = -2.0;
    C(1, 1) = 3.0;
    auto c = dense_eigs(C);
    CHECK(std::abs(c[0] - 1.0) < 1e-12);
    CHECK(std::abs(c[1] - 2.0) < 1e-12);
}

TEST_CASE("equal moduli are ordered by real then imaginary part")
{
    DenseMatrix A(4);
    A(0, 0) = Complex(0, 1);
    A(1, 1) = Complex(0, -1);
    A(2, 2) = -1.0;
    A(3, 3) = 1.0;
    auto v = dense_eigs(A);
    CHECK(v[0] == Complex(-1.0));
    CHECK(v[1] == Complex(0, -1));
    CHECK(v[2] == Complex(0, 1));
    CHECK(v[3] == Complex(1.0));
}

TEST_CASE("eigenvectors")
{
    DenseMatrix C(2);
    C(0, 1) = 1.0;
    C(1, 0) = -2.0;
    C(1, 1) = 3.0;
    auto es = dense_eigensystem(C);
    for (std::size_t k = 0; k < 2; ++k) {
        auto& x = es.vectors[k];
        double nrm = std::hypot(std::abs(x[0]), std::abs(x[1]));
        CHECK(std::abs(nrm - 1.0) < 1e-14);
        for (int r = 0; r < 2; ++r) {
            Complex ax = C(r, 0) * x[0] + C(r, 1) * x[1];
            CHECK(std::abs(ax - es.values[k] * x[r]) < 1e-12);
        }
    }
}

TEST_CASE("constant local potential shifts every eigenvalue by one")
{
    OperatorContext ctx(Potential::constant(1.0), Potential(), 0.0, 0.0, 1024);
    auto recs = galerkin_eigenvalues(ctx, 128, 10);
    for (int n = 1; n <= 10; ++n)
        CHECK(std::abs(recs[n].lambda - (kPi * kPi * n * n + 1.0)) < 1e-6);
}

TEST_CASE("smooth potentials: enclosure, convergence and agreement with shooting")
{
    auto V = Potential::constant({0.5, 0.25}) + Potential::trigonometric(0.3, 1);
    OperatorContext ctx(V, Potential::trigonometric(0.4, 2), 0.3, 0.7, 4096);
    double v = ctx.potential_bound();
    auto recs = galerkin_eigenvalues(ctx, 128, 15);
    for (const auto& r : recs) {
        CHECK(std::abs(r.lambda.imag()) <= v);
        CHECK(r.lambda.real() >= -v);
        CHECK(r.method == Method::galerkin);
    }
    auto coarse = galerkin_eigenvalues(ctx, 32, 8);
    CHECK(recs[8].residual < coarse[8].residual);
    for (long n = 5; n <= 15; ++n) {
        auto s = shooting_eigenvalue(ctx, n);
        CHECK(std::abs(s.lambda - recs[n].lambda) <= 1e-6);
    }
}

TEST_CASE("galerkin preconditions")
{
    OperatorContext ctx(Potential::constant(1.0), Potential(), 0.0, 0.0, 256);
    CHECK_THROWS_AS(assemble(ctx, 4), DomainError);
    CHECK_THROWS_AS(galerkin_eigenvalues(ctx, 32, 9), DomainError);
}
