#include "nlspec/potential.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace nlspec {

namespace {

constexpr double kEdgeSlack = 1e-12;
constexpr int kSupSamples = 8192;

double clamp_unit(double x)
{
    if (!(x >= -kEdgeSlack && x <= 1.0 + kEdgeSlack))
        throw DomainError("potential evaluated outside [0,1] at x=" + std::to_string(x));
    return std::clamp(x, 0.0, 1.0);
}

Complex eval_polynomial(const std::vector<Complex>& c, double x, int deriv)
{
    // Horner on the deriv-th derivative coefficients
    Complex acc = 0.0;
    for (int k = static_cast<int>(c.size()) - 1; k >= deriv; --k) {
        double falling = 1.0;
        for (int m = 0; m < deriv; ++m)
            falling *= k - m;
        acc = acc * x + falling * c[static_cast<std::size_t>(k)];
    }
    return acc;
}

Complex eval_trig(Complex a, double k, double x, int deriv)
{
    const double w = k * kPi;
    // d^m/dx^m cos(wx) = w^m cos(wx + m pi/2)
    double phase = w * x;
    switch (deriv % 4) {
    case 0: return a * std::pow(w, deriv) * std::cos(phase);
    case 1: return -a * std::pow(w, deriv) * std::sin(phase);
    case 2: return -a * std::pow(w, deriv) * std::cos(phase);
    default: return a * std::pow(w, deriv) * std::sin(phase);
    }
}

Complex eval_table(const PotentialTerm& t, double x, int deriv)
{
    const auto& xs = t.nodes;
    const auto& ys = t.coefficients;
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    if (hi >= xs.size())
        hi = xs.size() - 1;
    if (hi == 0)
        hi = 1;
    std::size_t lo = hi - 1;
    double dx = xs[hi] - xs[lo];
    if (deriv == 1)
        return (ys[hi] - ys[lo]) / dx;
    double w = (x - xs[lo]) / dx;
    return (1.0 - w) * ys[lo] + w * ys[hi];
}

double parse_real(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw DomainError("cannot parse number '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

bool starts_with_keyword(std::string_view s)
{
    for (std::string_view kw : {"const:", "poly:", "trig:", "file:"})
        if (s.substr(0, kw.size()) == kw)
            return true;
    return false;
}

Potential load_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open potential file '" + path + "'");
    std::vector<double> xs;
    std::vector<Complex> ys;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        auto cols = split(line, ',');
        if (cols.size() < 2 || cols.size() > 3)
            throw DomainError(path + ":" + std::to_string(lineno) + ": expected x,re,im");
        double x = 0.0;
        try {
            x = parse_real(cols[0]);
        } catch (const DomainError&) {
            if (xs.empty() && lineno == 1)
                continue; // header
            throw;
        }
        double re = parse_real(cols[1]);
        double im = cols.size() == 3 ? parse_real(cols[2]) : 0.0;
        xs.push_back(x);
        ys.emplace_back(re, im);
    }
    return Potential::tabulated(std::move(xs), std::move(ys));
}

Potential parse_term(std::string_view t)
{
    auto colon = t.find(':');
    if (colon == std::string_view::npos)
        throw DomainError("potential term '" + std::string(t) + "' lacks a kind prefix");
    std::string_view kind = t.substr(0, colon);
    std::string_view body = t.substr(colon + 1);
    if (kind == "file")
        return load_table(std::string(body));
    auto args = split(body, ',');
    if (kind == "const") {
        if (args.size() == 1)
            return Potential::constant(parse_complex(args[0]));
        if (args.size() == 2)
            return Potential::constant({parse_real(args[0]), parse_real(args[1])});
        throw DomainError("const: expects re[,im]");
    }
    if (kind == "poly") {
        std::vector<Complex> c;
        for (auto a : args)
            c.push_back(parse_complex(a));
        return Potential::polynomial(std::move(c));
    }
    if (kind == "trig") {
        if (args.size() != 2)
            throw DomainError("trig: expects a,k");
        return Potential::trigonometric(parse_complex(args[0]), parse_real(args[1]));
    }
    throw DomainError("unknown potential kind '" + std::string(kind) + "'");
}

} // namespace

int PotentialTerm::derivative_order_available() const
{
    return kind == PotentialKind::tabulated ? 1 : kAnyOrder;
}

Potential Potential::constant(Complex value)
{
    Potential p;
    p.terms_.push_back({PotentialKind::constant, {value}, 0.0, {}});
    return p;
}

Potential Potential::polynomial(std::vector<Complex> coefficients)
{
    if (coefficients.empty())
        throw DomainError("polynomial potential needs at least one coefficient");
    Potential p;
    p.terms_.push_back({PotentialKind::polynomial, std::move(coefficients), 0.0, {}});
    return p;
}

Potential Potential::trigonometric(Complex amplitude, double frequency)
{
    if (!std::isfinite(frequency))
        throw DomainError("trigonometric potential frequency must be finite");
    Potential p;
    p.terms_.push_back({PotentialKind::trigonometric, {amplitude}, frequency, {}});
    return p;
}

Potential Potential::tabulated(std::vector<double> x, std::vector<Complex> values)
{
    if (x.size() != values.size() || x.size() < 2)
        throw DomainError("tabulated potential needs at least two (x, value) rows");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1]))
            throw DomainError("tabulated potential abscissae must be strictly ascending");
    if (std::abs(x.front()) > kEdgeSlack || std::abs(x.back() - 1.0) > kEdgeSlack)
        throw DomainError("tabulated potential must span [0,1]");
    x.front() = 0.0;
    x.back() = 1.0;
    Potential p;
    p.terms_.push_back({PotentialKind::tabulated, std::move(values), 0.0, std::move(x)});
    return p;
}

Potential& Potential::operator+=(const Potential& other)
{
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

Complex Potential::eval(double x, int deriv) const
{
    if (deriv < 0)
        throw DomainError("negative derivative order");
    if (deriv > derivative_order_available())
        throw DomainError("derivative of order " + std::to_string(deriv) +
                          " not available for this potential");
    x = clamp_unit(x);
    Complex sum = 0.0;
    for (const auto& t : terms_) {
        switch (t.kind) {
        case PotentialKind::constant:
            if (deriv == 0)
                sum += t.coefficients[0];
            break;
        case PotentialKind::polynomial:
            sum += eval_polynomial(t.coefficients, x, deriv);
            break;
        case PotentialKind::trigonometric:
            sum += eval_trig(t.coefficients[0], t.frequency, x, deriv);
            break;
        case PotentialKind::tabulated:
            sum += eval_table(t, x, deriv);
            break;
        }
    }
    return sum;
}

int Potential::derivative_order_available() const
{
    int order = kAnyOrder;
    for (const auto& t : terms_)
        order = std::min(order, t.derivative_order_available());
    return order;
}

bool Potential::is_zero() const
{
    for (const auto& t : terms_)
        for (auto c : t.coefficients)
            if (c != 0.0)
                return false;
    return true;
}

double Potential::sup_norm() const
{
    if (terms_.empty())
        return 0.0;
    bool all_const = std::all_of(terms_.begin(), terms_.end(),
                                 [](const auto& t) { return t.kind == PotentialKind::constant; });
    if (all_const)
        return std::abs(eval(0.0));
    if (terms_.size() == 1 && terms_[0].kind == PotentialKind::tabulated) {
        double m = 0.0;
        for (auto c : terms_[0].coefficients)
            m = std::max(m, std::abs(c));
        return m;
    }
    double m = 0.0;
    for (int i = 0; i <= kSupSamples; ++i)
        m = std::max(m, std::abs(eval(static_cast<double>(i) / kSupSamples)));
    for (const auto& t : terms_)
        for (double x : t.nodes)
            m = std::max(m, std::abs(eval(x)));
    return m;
}

Complex parse_complex(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    if (s.empty())
        throw DomainError("empty complex literal");
    if (s.back() != 'i')
        return {parse_real(s), 0.0};
    std::string_view body = s.substr(0, s.size() - 1);
    // split at the last sign that is not an exponent sign and not leading
    std::size_t cut = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    auto imag_of = [](std::string_view t) {
        if (t.empty() || t == "+")
            return 1.0;
        if (t == "-")
            return -1.0;
        return parse_real(t);
    };
    if (cut == std::string_view::npos)
        return {0.0, imag_of(body)};
    return {parse_real(body.substr(0, cut)), imag_of(body.substr(cut))};
}

Potential parse_potential(std::string_view text)
{
    if (text.empty())
        throw DomainError("empty potential description");
    // a '+' starts a new term only when followed by a kind keyword
    Potential total;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= text.size(); ++k) {
        bool boundary = k == text.size() ||
                        (text[k] == '+' && starts_with_keyword(text.substr(k + 1)));
        if (!boundary)
            continue;
        total += parse_term(text.substr(start, k - start));
        start = k + 1;
    }
    return total;
}

} // namespace nlspec
