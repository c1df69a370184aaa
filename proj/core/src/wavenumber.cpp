#include "nlspec/wavenumber.hpp"

#include <cmath>

namespace nlspec {

Complex Wavenumber::squared() const
{
    double a = kPi * static_cast<double>(index);
    return a * a + offset * (2.0 * a + offset);
}

Wavenumber Wavenumber::nearest(Complex z)
{
    long n = std::lround(z.real() / kPi);
    return {n, z - kPi * static_cast<double>(n)};
}

CosSin cos_sin(const Wavenumber& z, double x)
{
    // index * x modulo 2, carried as head + tail so the reduction is exact
    double n = static_cast<double>(z.index);
    double p = n * x;
    double tail = std::fma(n, x, -p);
    double head = std::fmod(p, 2.0);
    Complex w = z.offset * x;
    if (tail == 0.0 && (head == 0.0 || std::abs(head) == 1.0)) {
        double sign = head == 0.0 ? 1.0 : -1.0;
        return {sign * std::cos(w), sign * std::sin(w)};
    }
    Complex arg = kPi * (head + tail) + w;
    return {std::cos(arg), std::sin(arg)};
}

double squared_gap(const Wavenumber& a, const Wavenumber& b)
{
    if (a.index == b.index) {
        double base = 2.0 * kPi * static_cast<double>(a.index);
        return std::abs(a.offset - b.offset) * std::abs(base + a.offset + b.offset);
    }
    return std::abs(a.squared() - b.squared());
}

} // namespace nlspec
