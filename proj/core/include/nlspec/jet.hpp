#pragma once

#include "nlspec/types.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace nlspec {

inline constexpr int kMaxJetOrder = 12;

/// Truncated Taylor polynomial sum_{m<=order} c_m xi^m in a complex increment xi.
/// Coefficients are Taylor coefficients, i.e. derivative(m) / m!.
class TaylorJet {
public:
    TaylorJet() = default;
    explicit TaylorJet(int order) : order_(order)
    {
        if (order < 0 || order > kMaxJetOrder)
            throw DomainError("jet order must lie in [0, 12]");
    }

    static TaylorJet constant(Complex value, int order)
    {
        TaylorJet j(order);
        j.c_[0] = value;
        return j;
    }
    /// The identity jet center + xi.
    static TaylorJet variable(Complex center, int order)
    {
        TaylorJet j(order);
        j.c_[0] = center;
        if (order > 0)
            j.c_[1] = 1.0;
        return j;
    }

    int order() const { return order_; }
    Complex operator[](int m) const { return c_[static_cast<std::size_t>(m)]; }
    Complex& operator[](int m) { return c_[static_cast<std::size_t>(m)]; }
    Complex value() const { return c_[0]; }
    /// m-th derivative with respect to the increment at xi = 0.
    Complex derivative(int m) const
    {
        double f = 1.0;
        for (int k = 2; k <= m; ++k)
            f *= k;
        return f * c_[static_cast<std::size_t>(m)];
    }
    /// Horner evaluation at the increment xi.
    Complex evaluate(Complex xi) const
    {
        Complex acc = 0.0;
        for (int m = order_; m >= 0; --m)
            acc = acc * xi + c_[static_cast<std::size_t>(m)];
        return acc;
    }
    double max_abs() const
    {
        double r = 0.0;
        for (int m = 0; m <= order_; ++m)
            r = std::max(r, std::abs(c_[static_cast<std::size_t>(m)]));
        return r;
    }

    TaylorJet& operator+=(const TaylorJet& o)
    {
        for (int m = 0; m <= order_; ++m)
            c_[static_cast<std::size_t>(m)] += o.c_[static_cast<std::size_t>(m)];
        return *this;
    }
    TaylorJet& operator-=(const TaylorJet& o)
    {
        for (int m = 0; m <= order_; ++m)
            c_[static_cast<std::size_t>(m)] -= o.c_[static_cast<std::size_t>(m)];
        return *this;
    }
    TaylorJet& operator*=(Complex s)
    {
        for (int m = 0; m <= order_; ++m)
            c_[static_cast<std::size_t>(m)] *= s;
        return *this;
    }
    TaylorJet& operator*=(double s)
    {
        for (int m = 0; m <= order_; ++m)
            c_[static_cast<std::size_t>(m)] *= s;
        return *this;
    }

    friend TaylorJet operator+(TaylorJet a, const TaylorJet& b) { return a += b; }
    friend TaylorJet operator-(TaylorJet a, const TaylorJet& b) { return a -= b; }
    friend TaylorJet operator-(TaylorJet a) { return a *= -1.0; }
    friend TaylorJet operator*(TaylorJet a, Complex s) { return a *= s; }
    friend TaylorJet operator*(Complex s, TaylorJet a) { return a *= s; }
    friend TaylorJet operator*(double s, TaylorJet a) { return a *= s; }

    /// Truncated Cauchy product; the result has the smaller of the two orders.
    friend TaylorJet operator*(const TaylorJet& a, const TaylorJet& b)
    {
        TaylorJet r(std::min(a.order_, b.order_));
        for (int i = 0; i <= r.order_; ++i) {
            Complex s = 0.0;
            for (int k = 0; k <= i; ++k)
                s += a.c_[static_cast<std::size_t>(k)] * b.c_[static_cast<std::size_t>(i - k)];
            r.c_[static_cast<std::size_t>(i)] = s;
        }
        return r;
    }

    /// a += b * c, truncated to the order of a.
    friend void fma_into(TaylorJet& a, const TaylorJet& b, const TaylorJet& c)
    {
        for (int i = 0; i <= a.order_; ++i) {
            Complex s = 0.0;
            for (int k = 0; k <= i; ++k)
                s += b.c_[static_cast<std::size_t>(k)] * c.c_[static_cast<std::size_t>(i - k)];
            a.c_[static_cast<std::size_t>(i)] += s;
        }
    }

    friend TaylorJet reciprocal(const TaylorJet& a)
    {
        if (a.c_[0] == 0.0)
            throw DomainError("reciprocal of a jet with zero constant term");
        TaylorJet r(a.order_);
        Complex inv = 1.0 / a.c_[0];
        r.c_[0] = inv;
        for (int i = 1; i <= a.order_; ++i) {
            Complex s = 0.0;
            for (int k = 1; k <= i; ++k)
                s += a.c_[static_cast<std::size_t>(k)] * r.c_[static_cast<std::size_t>(i - k)];
            r.c_[static_cast<std::size_t>(i)] = -s * inv;
        }
        return r;
    }
    friend TaylorJet operator/(const TaylorJet& a, const TaylorJet& b) { return a * reciprocal(b); }

    /// sin and cos of a jet via s' = c u', c' = -s u'.
    friend void sincos(const TaylorJet& u, TaylorJet& s, TaylorJet& c)
    {
        s = TaylorJet(u.order_);
        c = TaylorJet(u.order_);
        s.c_[0] = std::sin(u.c_[0]);
        c.c_[0] = std::cos(u.c_[0]);
        for (int i = 1; i <= u.order_; ++i) {
            Complex ds = 0.0, dc = 0.0;
            for (int k = 1; k <= i; ++k) {
                Complex w = static_cast<double>(k) * u.c_[static_cast<std::size_t>(k)];
                ds += w * c.c_[static_cast<std::size_t>(i - k)];
                dc -= w * s.c_[static_cast<std::size_t>(i - k)];
            }
            s.c_[static_cast<std::size_t>(i)] = ds / static_cast<double>(i);
            c.c_[static_cast<std::size_t>(i)] = dc / static_cast<double>(i);
        }
    }
    friend TaylorJet sin(const TaylorJet& u)
    {
        TaylorJet s, c;
        sincos(u, s, c);
        return s;
    }
    friend TaylorJet cos(const TaylorJet& u)
    {
        TaylorJet s, c;
        sincos(u, s, c);
        return c;
    }

private:
    int order_ = 0;
    std::array<Complex, kMaxJetOrder + 1> c_{};
};

} // namespace nlspec
