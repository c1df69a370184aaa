#include "nlspec/galerkin.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace nlspec {

namespace {

using Gauss = boost::math::quadrature::gauss<double, 20>;
using MatrixXcdR = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

constexpr double kRefinementLimit = 1e-4;

// W(p) = int_a^b f(x) exp(i pi p x) dx for p = -pmax..pmax, Gauss-Legendre panels
std::vector<Complex> fourier_moments(const Potential& f, double a, double b, int pmax)
{
    std::vector<Complex> W(2 * static_cast<std::size_t>(pmax) + 1, 0.0);
    if (!(b > a))
        return W;

    std::vector<double> cuts{a, b};
    for (const auto& t : f.terms())
        for (double x : t.nodes)
            if (x > a && x < b)
                cuts.push_back(x);
    std::sort(cuts.begin(), cuts.end());

    double omega = kPi * pmax;
    std::vector<double> xs, ws;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        double lo = cuts[s], hi = cuts[s + 1];
        int panels = static_cast<int>(std::ceil(omega * (hi - lo) / 8.0)) + 4;
        double h = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p) {
            double mid = lo + (p + 0.5) * h;
            double half = 0.5 * h;
            const auto& abs = Gauss::abscissa();
            const auto& wts = Gauss::weights();
            for (std::size_t i = 0; i < abs.size(); ++i) {
                for (double sign : {-1.0, 1.0}) {
                    if (abs[i] == 0.0 && sign < 0)
                        continue;
                    xs.push_back(mid + sign * half * abs[i]);
                    ws.push_back(half * wts[i]);
                }
            }
        }
    }

    std::vector<Complex> fw(xs.size()), step(xs.size()), phase(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fw[i] = ws[i] * f.eval(xs[i]);
        step[i] = std::polar(1.0, kPi * xs[i]);
    }
    // positive and negative p by repeated multiplication, resynchronised every 64 steps
    for (int sign : {1, -1}) {
        for (std::size_t i = 0; i < xs.size(); ++i)
            phase[i] = 1.0;
        for (int p = 0; p <= pmax; ++p) {
            if (p > 0 && p % 64 == 0)
                for (std::size_t i = 0; i < xs.size(); ++i)
                    phase[i] = std::polar(1.0, sign * kPi * p * xs[i]);
            Complex s = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i)
                s += fw[i] * phase[i];
            W[static_cast<std::size_t>(pmax + sign * p)] = s;
            for (std::size_t i = 0; i < xs.size(); ++i)
                phase[i] *= sign > 0 ? step[i] : std::conj(step[i]);
        }
    }
    return W;
}

bool modulus_order(const Complex& a, const Complex& b)
{
    double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb)
        return ma < mb;
    if (a.real() != b.real())
        return a.real() < b.real();
    return a.imag() < b.imag();
}

MatrixXcdR to_eigen(const DenseMatrix& A)
{
    MatrixXcdR M(A.dim, A.dim);
    for (int r = 0; r < A.dim; ++r)
        for (int c = 0; c < A.dim; ++c)
            M(r, c) = A(r, c);
    return M;
}

} // namespace

DenseMatrix assemble(const OperatorContext& ctx, int K)
{
    if (K < 8)
        throw DomainError("Galerkin needs K >= 8");
    const double a = ctx.alpha(), b = ctx.beta();
    const int pmax = 2 * K;
    std::vector<Complex> WV, WQ;
    if (a < 1.0)
        WV = fourier_moments(ctx.V(), 0.0, 1.0 - a, pmax);
    if (b < 1.0)
        WQ = fourier_moments(ctx.Q(), b, 1.0, pmax);

    // int f(x) cos(pi p x + theta) dx
    auto cos_moment = [pmax](const std::vector<Complex>& W, int p, double theta) {
        Complex e = std::polar(1.0, theta);
        return 0.5 * (e * W[static_cast<std::size_t>(pmax + p)] +
                      std::conj(e) * W[static_cast<std::size_t>(pmax - p)]);
    };

    DenseMatrix A(K);
    for (int k = 0; k < K; ++k) {
        double sk = k == 0 ? 1.0 : std::sqrt(2.0);
        for (int m = 0; m < K; ++m) {
            double sm = m == 0 ? 1.0 : std::sqrt(2.0);
            Complex e = 0.0;
            // cos(pi m (x + s)) cos(pi k x) = (cos(pi (m+k) x + pi m s) + cos(pi (m-k) x + pi m s)) / 2
            if (!WV.empty()) {
                double th = kPi * m * a;
                e += 0.5 * (cos_moment(WV, m + k, th) + cos_moment(WV, m - k, th));
            }
            if (!WQ.empty()) {
                double th = -kPi * m * b;
                e += 0.5 * (cos_moment(WQ, m + k, th) + cos_moment(WQ, m - k, th));
            }
            A(k, m) = sk * sm * e;
        }
        A(k, k) += (kPi * k) * (kPi * k);
    }
    return A;
}

EigenSystem dense_eigensystem(const DenseMatrix& A)
{
    if (A.dim == 0)
        return {};
    Eigen::ComplexEigenSolver<MatrixXcdR> solver;
    solver.setMaxIterations(30 * static_cast<Eigen::Index>(A.dim));
    solver.compute(to_eigen(A), true);
    if (solver.info() != Eigen::Success)
        throw NumericalError("dense eigensolver did not converge within 30*K iterations");
    const auto& vals = solver.eigenvalues();
    std::vector<int> order(static_cast<std::size_t>(A.dim));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return modulus_order(vals(i), vals(j)); });
    EigenSystem out;
    for (int i : order) {
        out.values.push_back(vals(i));
        Eigen::VectorXcd v = solver.eigenvectors().col(i).normalized();
        out.vectors.emplace_back(v.data(), v.data() + v.size());
    }
    return out;
}

std::vector<Complex> dense_eigs(const DenseMatrix& A)
{
    if (A.dim == 0)
        return {};
    Eigen::ComplexEigenSolver<MatrixXcdR> solver;
    solver.setMaxIterations(30 * static_cast<Eigen::Index>(A.dim));
    solver.compute(to_eigen(A), false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("dense eigensolver did not converge within 30*K iterations");
    std::vector<Complex> v(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
    std::stable_sort(v.begin(), v.end(), modulus_order);
    return v;
}

std::vector<EigenvalueRecord> galerkin_eigenvalues(const OperatorContext& ctx, int K, int n_max)
{
    if (n_max < 0 || 4 * n_max > K)
        throw DomainError("Galerkin trusts only n <= K/4 (n_max=" + std::to_string(n_max) +
                          ", K=" + std::to_string(K) + ")");
    auto coarse = dense_eigs(assemble(ctx, K));
    auto fine = dense_eigs(assemble(ctx, 2 * K));
    std::vector<EigenvalueRecord> out;
    for (int n = 0; n <= n_max; ++n) {
        EigenvalueRecord r;
        r.n = n;
        r.method = Method::galerkin;
        r.lambda = coarse[static_cast<std::size_t>(n)];
        r.residual = std::abs(coarse[static_cast<std::size_t>(n)] - fine[static_cast<std::size_t>(n)]);
        if (r.residual > kRefinementLimit)
            throw NumericalError("Galerkin under-resolved at n=" + std::to_string(n) +
                                 " (K to 2K change " + std::to_string(r.residual) + ")");
        out.push_back(r);
    }
    return out;
}

} // namespace nlspec
