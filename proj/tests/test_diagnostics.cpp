#include <doctest.h>

#include <nlspec/diagnostics.hpp>
#include <nlspec/parallel.hpp>

#include <cmath>
#include <stdexcept>

using namespace nlspec;

namespace {

std::vector<std::pair<double, double>> power_law(double c, double p)
{
    std::vector<std::pair<double, double>> out;
    for (int n = 10; n <= 100; n += 10)
        out.emplace_back(n, c * std::pow(double(n), p));
    return out;
}

} // namespace

TEST_CASE("slope fit on synthetic power laws")
{
    CHECK(std::abs(slope_fit(power_law(1.0, -1.0)).slope + 1.0) < 1e-6);
    CHECK(std::abs(slope_fit(power_law(7.0, -3.0)).slope + 3.0) < 1e-6);
    auto fit = slope_fit(power_law(7.0, -3.0));
    CHECK(fit.used == 10);
    CHECK_FALSE(fit.below_floor);
    CHECK(std::abs(fit.intercept - std::log(7.0)) < 1e-9);
}

TEST_CASE("slope fit drops non-positive and sub-floor errors")
{
    auto pts = power_law(1.0, -1.0);
    pts.emplace_back(200.0, 0.0);
    pts.emplace_back(300.0, -1.0);
    auto fit = slope_fit(pts);
    CHECK(fit.used == 10);
    CHECK(std::abs(fit.slope + 1.0) < 1e-6);
    auto few = slope_fit(pts, 0.05);  // keeps n = 10, 20 only
    CHECK(few.used == 2);
    CHECK(few.below_floor);
}

TEST_CASE("method labels")
{
    CHECK(MethodSpec{Method::series, 4}.label() == "series4");
    CHECK(MethodSpec{Method::asymptotic2, 4}.label() == "asymptotic2");
    CHECK(reference_index({{Method::galerkin, 4}, {Method::shooting, 4}}) == 1);
    CHECK(reference_index({{Method::galerkin, 4}, {Method::series, 2}}) == 0);
}

TEST_CASE("free operator: every method agrees")
{
    OperatorContext ctx(Potential(), Potential(), 0.3, 0.7, 256);
    std::vector<MethodSpec> m{{Method::shooting, 4}, {Method::series, 4},
                              {Method::asymptotic2, 4}, {Method::asymptotic4, 4},
                              {Method::galerkin, 4}};
    auto rows = compare(ctx, 1, 8, m, {64, 2});
    REQUIRE(rows.size() == 8);
    for (const auto& r : rows) {
        CHECK(r.records.size() == 5);
        CHECK(r.gaps.size() == 10);
        for (const auto& g : r.gaps) {
            CHECK(g.gap <= 1e-10);
            CHECK(g.scaled1 == doctest::Approx(r.n * g.gap));
        }
    }
}

TEST_CASE("compare is independent of the job count")
{
    auto V = Potential::constant({0.5, 0.25}) + Potential::trigonometric(0.3, 1);
    OperatorContext ctx(V, Potential::trigonometric(0.4, 2), 0.3, 0.7, 512);
    std::vector<MethodSpec> m{{Method::shooting, 4}, {Method::series, 2}, {Method::asymptotic2, 4}};
    auto a = compare(ctx, 4, 12, m, {64, 1});
    auto b = compare(ctx, 4, 12, m, {64, 6});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a[i].records.size(); ++k)
            CHECK(a[i].records[k].lambda == b[i].records[k].lambda);
}

TEST_CASE("series of length 2 converges at least linearly")
{
    auto V = Potential::constant({0.5, 0.25}) + Potential::trigonometric(0.3, 1);
    OperatorContext ctx(V, Potential::trigonometric(0.4, 2), 0.3, 0.7, 4096);
    std::vector<MethodSpec> m{{Method::shooting, 4}, {Method::series, 2}};
    for (long n : {13L, 17L, 23L}) {
        auto r1 = compare(ctx, n, n, m, {256, 1});
        auto r2 = compare(ctx, 2 * n, 2 * n, m, {256, 1});
        CHECK(r2[0].reference_gap[1] <= 0.6 * r1[0].reference_gap[1]);
    }
}

TEST_CASE("eigenfunctions coincide with the cosine basis without perturbation")
{
    OperatorContext zero(Potential(), Potential(), 0.3, 0.7, 512);
    for (auto t : bari_closeness(zero, 1, 6, 2))
        CHECK(t.d < 1e-10);
    auto V = Potential::constant({1.0, 0.5});
    OperatorContext full(V, V, 1.0, 1.0, 512);
    for (auto t : bari_closeness(full, 1, 6, 2))
        CHECK(t.d < 1e-10);
    for (auto t : bari_closeness_galerkin(full, 32, 8))
        CHECK(t.d < 1e-12);
}

TEST_CASE("eigenfunction distances decay and the partial sums level off")
{
    auto V = Potential::constant({0.5, 0.25}) + Potential::trigonometric(0.3, 1);
    OperatorContext ctx(V, Potential::trigonometric(0.4, 2), 0.3, 0.7, 2048);
    auto terms = bari_closeness(ctx, 5, 40, 0);
    CHECK(terms.back().d < terms.front().d);
    // d_n = O(1/n): n d_n stays bounded, so the tail of the sum shrinks
    double early = 0.0, at20 = 0.0;
    for (const auto& t : terms) {
        if (t.n <= 20)
            early = std::max(early, t.n * t.d);
        if (t.n == 20)
            at20 = t.partial_sum;
    }
    CHECK(terms.back().n * terms.back().d <= 1.5 * early);
    CHECK(terms.back().partial_sum - at20 < 0.5 * at20);
    auto gal = bari_closeness_galerkin(ctx, 64, 16);
    CHECK(std::abs(gal[10].d - terms[5].d) < 1e-3);
}

TEST_CASE("continuity in the shift")
{
    auto V = Potential::constant({0.5, 0.25}) + Potential::trigonometric(0.3, 1);
    auto g = continuity_gaps(V, Potential::trigonometric(0.4, 2), 0.3, 0.7, 10, {1e-2, 1e-3}, 2048);
    REQUIRE(g.size() == 2);
    CHECK(g[1] < g[0]);
}

TEST_CASE("parallel map keeps order and reports the first failure")
{
    auto sq = parallel_map(50, 7, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < 50; ++i)
        CHECK(sq[i] == i * i);
    try {
        parallel_map(20, 4, [](std::size_t i) -> int {
            if (i == 5 || i == 13)
                throw std::runtime_error(std::to_string(i));
            return 0;
        });
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "5");
    }
}
