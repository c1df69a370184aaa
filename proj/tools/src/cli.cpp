#include "nlspec_cli/cli.hpp"

#include "nlspec_cli/table.hpp"

#include <nlspec/asymptotics.hpp>
#include <nlspec/diagnostics.hpp>
#include <nlspec/parallel.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace nlspec::cli {

namespace {

struct RunConfig {
    std::string V_spec = "const:0";
    std::string Q_spec = "const:0";
    std::string alpha_spec = "0";
    std::string beta_spec = "0";
    std::string n_spec = "1:10";
    std::string method_spec = "shooting";
    std::string series_spec = "4";
    int grid = kDefaultResolution;
    int K = 256;
    std::string format = "csv";
    std::string out_path;
    unsigned jobs = 0;
    std::string t_spec;
    std::string markers_path;
};

const char* const kColumnsHelp = R"(Output columns (CSV header / JSON "columns"):
  eigs     n,method,re,im,residual
  sweep    alpha,beta,n,re,im
  compare  n,method,re,im,gap,n_gap,n3_gap   (gap to shooting, or to the first method)
           followed by '# slope ...' summary lines
  curve    t,re,im   (markers file: n,t,re,im with t = pi n)
Potentials: const:re[,im] | poly:c0,c1,... | trig:a,k (a cos(k pi x)) | file:path (rows x,re,im);
            terms may be added with '+', e.g. const:0.5+0.25i+trig:0.3,1
Exit codes: 0 ok, 2 configuration error, 3 numerical failure.)";

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

double to_double(std::string_view s, const std::string& what)
{
    try {
        std::size_t used = 0;
        std::string str(s);
        double v = std::stod(str, &used);
        if (used != str.size())
            throw std::invalid_argument(str);
        return v;
    } catch (const std::exception&) {
        throw DomainError("cannot parse " + what + " '" + std::string(s) + "'");
    }
}

long to_long(std::string_view s, const std::string& what)
{
    double v = to_double(s, what);
    if (v != std::floor(v) || std::abs(v) > 1e9)
        throw DomainError(what + " must be an integer");
    return static_cast<long>(v);
}

/// "v" or "lo:hi:steps" (steps points, endpoints included)
std::vector<double> parse_values(const std::string& spec, const std::string& what)
{
    auto parts = split(spec, ':');
    if (parts.size() == 1)
        return {to_double(parts[0], what)};
    if (parts.size() != 3)
        throw DomainError(what + " must be a value or lo:hi:steps");
    double lo = to_double(parts[0], what), hi = to_double(parts[1], what);
    long steps = to_long(parts[2], what + " steps");
    if (steps < 1)
        throw DomainError(what + " steps must be positive");
    std::vector<double> v;
    for (long i = 0; i < steps; ++i)
        v.push_back(steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (steps - 1));
    if (steps > 1)
        v.back() = hi;
    return v;
}

std::vector<double> parse_shift(const std::string& spec, const std::string& name)
{
    auto v = parse_values(spec, name);
    for (double x : v)
        if (!(x >= 0.0 && x <= 1.0))
            throw DomainError(name + " out of [0,1]");
    return v;
}

std::pair<long, long> parse_n(const std::string& spec)
{
    auto parts = split(spec, ':');
    long lo = 0, hi = 0;
    if (parts.size() == 1)
        lo = hi = to_long(parts[0], "n");
    else if (parts.size() == 2) {
        lo = to_long(parts[0], "n");
        hi = to_long(parts[1], "n");
    } else
        throw DomainError("--n must be n or lo:hi");
    if (lo < 1 || hi < lo)
        throw DomainError("--n needs 1 <= lo <= hi");
    return {lo, hi};
}

std::vector<int> parse_series_N(const std::string& spec)
{
    auto parts = split(spec, ':');
    long lo = 0, hi = 0;
    if (parts.size() == 1)
        lo = hi = to_long(parts[0], "series-N");
    else if (parts.size() == 2) {
        lo = to_long(parts[0], "series-N");
        hi = to_long(parts[1], "series-N");
    } else
        throw DomainError("--series-N must be N or lo:hi");
    if (lo < 1 || hi > 8 || hi < lo)
        throw DomainError("series-N out of [1,8]");
    std::vector<int> out;
    for (long N = lo; N <= hi; ++N)
        out.push_back(static_cast<int>(N));
    return out;
}

std::vector<Method> parse_methods(const std::string& spec)
{
    std::vector<Method> out;
    for (auto s : split(spec, ',')) {
        Method m = parse_method(s);
        if (std::find(out.begin(), out.end(), m) == out.end())
            out.push_back(m);
    }
    return out;
}

std::string label_of(Method m, int N)
{
    return MethodSpec{m, N}.label();
}

template <class F>
auto guarded(long n, const std::string& what, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const NumericalError& e) {
        throw NumericalError("n=" + std::to_string(n) + " method=" + what + ": " + e.what());
    }
}

/// Evaluates eigenvalues for one (V, Q, alpha, beta). Below n_check the shooting and series
/// methods are replaced by Galerkin values.
class Evaluator {
public:
    Evaluator(const RunConfig& cfg, const Potential& V, const Potential& Q, double alpha, double beta,
              const std::vector<Method>& methods, long n_lo, long n_hi)
        : ctx_(V, Q, alpha, beta, cfg.grid), methods_(methods), K_(cfg.K)
    {
        bool analytic = std::any_of(methods.begin(), methods.end(), [](Method m) {
            return m == Method::shooting || m == Method::series;
        });
        bool galerkin = std::find(methods.begin(), methods.end(), Method::galerkin) != methods.end();
        if (analytic)
            n_check_ = guarded(0, "root census", [&] { return find_n_check(ctx_); });
        long g_max = galerkin ? n_hi : (analytic && n_lo < n_check_ ? n_check_ - 1 : -1);
        if (g_max >= 0) {
            if (4 * g_max > K_)
                throw DomainError("--K " + std::to_string(K_) + " too small for Galerkin up to n=" +
                                  std::to_string(g_max) + " (need K >= 4n)");
            galerkin_ = guarded(g_max, "galerkin",
                                [&] { return galerkin_eigenvalues(ctx_, K_, static_cast<int>(g_max)); });
        }
    }

    const OperatorContext& context() const { return ctx_; }

    /// Records for one n in method order, with fallbacks de-duplicated.
    std::vector<EigenvalueRecord> at(long n, int series_N) const
    {
        std::vector<EigenvalueRecord> out;
        bool fallback_done = std::find(methods_.begin(), methods_.end(), Method::galerkin) !=
                             methods_.end();
        for (Method m : methods_) {
            bool analytic = m == Method::shooting || m == Method::series;
            if (analytic && n < n_check_) {
                if (!fallback_done)
                    out.push_back(galerkin_[static_cast<std::size_t>(n)]);
                fallback_done = true;
                continue;
            }
            out.push_back(one(n, m, series_N));
        }
        return out;
    }

    EigenvalueRecord one(long n, Method m, int series_N) const
    {
        return guarded(n, label_of(m, series_N), [&]() -> EigenvalueRecord {
            switch (m) {
            case Method::shooting: return shooting_eigenvalue(ctx_, n);
            case Method::series:
                return series_eigenvalue(build_coefficient_table(ctx_, n, series_N), series_N);
            case Method::asymptotic2: return lambda_two_term(ctx_, n);
            case Method::asymptotic4: return lambda_four_term(ctx_, n);
            case Method::galerkin: return galerkin_[static_cast<std::size_t>(n)];
            }
            throw DomainError("unknown method");
        });
    }

private:
    OperatorContext ctx_;
    std::vector<Method> methods_;
    int K_;
    long n_check_ = 1;
    std::vector<EigenvalueRecord> galerkin_;
};

void emit(const RunConfig& cfg, const Table& t, std::ostream& out)
{
    auto write = [&](std::ostream& os) {
        if (cfg.format == "json")
            write_json(os, t);
        else
            write_csv(os, t);
    };
    if (cfg.out_path.empty()) {
        write(out);
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f)
        throw DomainError("cannot open output file '" + cfg.out_path + "'");
    write(f);
}

void write_file(const RunConfig& cfg, const std::string& path, const Table& t)
{
    RunConfig c = cfg;
    c.out_path = path;
    std::ostringstream unused;
    emit(c, t, unused);
}

double single_value(const std::string& spec, const std::string& name)
{
    auto v = parse_shift(spec, name);
    if (v.size() != 1)
        throw DomainError(name + " must be a single value for this command");
    return v[0];
}

Table cmd_eigs(const RunConfig& cfg)
{
    Potential V = parse_potential(cfg.V_spec), Q = parse_potential(cfg.Q_spec);
    double alpha = single_value(cfg.alpha_spec, "alpha");
    double beta = single_value(cfg.beta_spec, "beta");
    auto [n_lo, n_hi] = parse_n(cfg.n_spec);
    auto methods = parse_methods(cfg.method_spec);
    auto Ns = parse_series_N(cfg.series_spec);
    if (Ns.size() != 1)
        throw DomainError("eigs takes a single --series-N");
    Evaluator ev(cfg, V, Q, alpha, beta, methods, n_lo, n_hi);

    auto per_n = parallel_map(static_cast<std::size_t>(n_hi - n_lo + 1), cfg.jobs, [&](std::size_t i) {
        return ev.at(n_lo + static_cast<long>(i), Ns[0]);
    });
    Table t;
    t.columns = {"n", "method", "re", "im", "residual"};
    for (const auto& recs : per_n)
        for (const auto& r : recs)
            t.rows.push_back({static_cast<long>(r.n), std::string(to_string(r.method)), r.lambda.real(),
                              r.lambda.imag(), r.residual});
    return t;
}

Table cmd_sweep(const RunConfig& cfg)
{
    Potential V = parse_potential(cfg.V_spec), Q = parse_potential(cfg.Q_spec);
    auto alphas = parse_shift(cfg.alpha_spec, "alpha");
    auto betas = parse_shift(cfg.beta_spec, "beta");
    if (alphas.size() < 2 && betas.size() < 2)
        throw DomainError("sweep needs --alpha or --beta as lo:hi:steps");
    auto [n_lo, n_hi] = parse_n(cfg.n_spec);
    auto methods = parse_methods(cfg.method_spec);
    if (methods.size() != 1)
        throw DomainError("sweep takes exactly one method");
    auto Ns = parse_series_N(cfg.series_spec);
    if (Ns.size() != 1)
        throw DomainError("sweep takes a single --series-N");

    std::vector<std::pair<double, double>> points;
    for (double a : alphas)
        for (double b : betas)
            points.emplace_back(a, b);
    auto blocks = parallel_map(points.size(), cfg.jobs, [&](std::size_t i) {
        auto [a, b] = points[i];
        Evaluator ev(cfg, V, Q, a, b, methods, n_lo, n_hi);
        std::vector<EigenvalueRecord> recs;
        for (long n = n_lo; n <= n_hi; ++n)
            for (auto& r : ev.at(n, Ns[0]))
                recs.push_back(r);
        return recs;
    });
    Table t;
    t.columns = {"alpha", "beta", "n", "re", "im"};
    for (std::size_t i = 0; i < points.size(); ++i)
        for (const auto& r : blocks[i])
            t.rows.push_back({points[i].first, points[i].second, static_cast<long>(r.n),
                              r.lambda.real(), r.lambda.imag()});
    return t;
}

Table cmd_compare(const RunConfig& cfg)
{
    Potential V = parse_potential(cfg.V_spec), Q = parse_potential(cfg.Q_spec);
    double alpha = single_value(cfg.alpha_spec, "alpha");
    double beta = single_value(cfg.beta_spec, "beta");
    auto [n_lo, n_hi] = parse_n(cfg.n_spec);
    auto Ns = parse_series_N(cfg.series_spec);
    std::vector<MethodSpec> specs;
    for (Method m : parse_methods(cfg.method_spec)) {
        if (m == Method::series)
            for (int N : Ns)
                specs.push_back({m, N});
        else
            specs.push_back({m, Ns.front()});
    }
    if (std::any_of(specs.begin(), specs.end(), [](const auto& s) { return s.method == Method::galerkin; }) &&
        4 * n_hi > cfg.K)
        throw DomainError("--K " + std::to_string(cfg.K) + " too small for Galerkin up to n=" +
                          std::to_string(n_hi) + " (need K >= 4n)");

    OperatorContext ctx(V, Q, alpha, beta, cfg.grid);
    CompareOptions opt;
    opt.galerkin_K = cfg.K;
    opt.jobs = cfg.jobs;
    std::vector<ComparisonRow> rows;
    try {
        rows = compare(ctx, n_lo, n_hi, specs, opt);
    } catch (const NumericalError& e) {
        throw NumericalError(std::string("compare: ") + e.what());
    }

    Table t;
    t.columns = {"n", "method", "re", "im", "gap", "n_gap", "n3_gap"};
    for (const auto& row : rows)
        for (std::size_t k = 0; k < specs.size(); ++k) {
            const auto& r = row.records[k];
            double g = row.reference_gap[k];
            double n = static_cast<double>(row.n);
            t.rows.push_back({row.n, specs[k].label(), r.lambda.real(), r.lambda.imag(), g, n * g,
                              n * n * n * g});
        }
    std::size_t ref = reference_index(specs);
    for (std::size_t k = 0; k < specs.size(); ++k) {
        if (k == ref)
            continue;
        std::vector<std::pair<double, double>> pts;
        for (const auto& row : rows)
            pts.emplace_back(static_cast<double>(row.n), row.reference_gap[k]);
        SlopeFit fit = slope_fit(pts, kGapFloor);
        SummaryLine s{"slope", {{"method", specs[k].label()}, {"reference", specs[ref].label()}}};
        if (fit.below_floor)
            s.fields.emplace_back("slope", std::string("below floor"));
        else
            s.fields.emplace_back("slope", fit.slope);
        s.fields.emplace_back("points", static_cast<long>(fit.used));
        t.summary.push_back(std::move(s));
    }
    return t;
}

Table cmd_curve(const RunConfig& cfg)
{
    Potential V = parse_potential(cfg.V_spec), Q = parse_potential(cfg.Q_spec);
    double alpha = single_value(cfg.alpha_spec, "alpha");
    double beta = single_value(cfg.beta_spec, "beta");
    auto [n_lo, n_hi] = parse_n(cfg.n_spec);
    std::string t_spec = cfg.t_spec;
    if (t_spec.empty()) {
        t_spec = "0:" + format_double(kPi * (static_cast<double>(n_hi) + 0.5)) + ":" +
                 std::to_string(100 * n_hi + 1);
    }
    auto ts = parse_values(t_spec, "t");
    OperatorContext ctx(V, Q, alpha, beta, cfg.grid);
    auto gamma = gamma_curve(ctx, ts);
    Table t;
    t.columns = {"t", "re", "im"};
    for (std::size_t i = 0; i < ts.size(); ++i)
        t.rows.push_back({ts[i], gamma[i].real(), gamma[i].imag()});

    if (!cfg.markers_path.empty()) {
        std::vector<Method> methods{Method::shooting};
        Evaluator ev(cfg, V, Q, alpha, beta, methods, n_lo, n_hi);
        auto recs = parallel_map(static_cast<std::size_t>(n_hi - n_lo + 1), cfg.jobs, [&](std::size_t i) {
            return ev.at(n_lo + static_cast<long>(i), 4).front();
        });
        Table m;
        m.columns = {"n", "t", "re", "im"};
        for (const auto& r : recs)
            m.rows.push_back({static_cast<long>(r.n), kPi * r.n, r.lambda.real(), r.lambda.imag()});
        write_file(cfg, cfg.markers_path, m);
    }
    return t;
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<Check> selftest_checks(const RunConfig& cfg)
{
    std::vector<Check> out;
    auto add = [&](std::string name, bool pass, double value) {
        out.push_back({std::move(name), pass, format_double(value)});
    };
    {
        OperatorContext ctx(Potential(), Potential(), 0.3, 0.7, 512);
        double worst = 0.0;
        for (long n = 1; n <= 5; ++n) {
            double w = kPi * static_cast<double>(n);
            worst = std::max(worst, std::abs(shooting_eigenvalue(ctx, n).lambda - w * w));
            worst = std::max(worst, std::abs(lambda_four_term(ctx, n).lambda - w * w));
        }
        add("unperturbed eigenvalues are pi^2 n^2", worst < 1e-9, worst);
    }
    {
        OperatorContext ctx(Potential::constant(1.0), Potential(), 0.5, 0.0, 512);
        double err = std::abs(lambda_two_term(ctx, 2).lambda - (4.0 * kPi * kPi - 0.5));
        add("two-term value for V=1, alpha=1/2, n=2", err < 1e-9, err);
    }
    {
        OperatorContext ctx(Potential::constant(1.0), Potential(), 0.0, 0.0, 1024);
        auto g = galerkin_eigenvalues(ctx, 32, 8);
        double worst = 0.0;
        for (long n = 1; n <= 8; ++n) {
            double w = kPi * static_cast<double>(n);
            worst = std::max(worst, std::abs(g[static_cast<std::size_t>(n)].lambda - (w * w + 1.0)));
            worst = std::max(worst, std::abs(shooting_eigenvalue(ctx, n).lambda - (w * w + 1.0)));
        }
        add("constant shift V=1 gives pi^2 n^2 + 1", worst < 1e-6, worst);
    }
    {
        auto V = parse_potential("const:0.5+0.25i+trig:0.3,1");
        auto Q = parse_potential("trig:0.4,2");
        OperatorContext ctx(V, Q, 0.3, 0.7, cfg.grid);
        auto s = shooting_eigenvalue(ctx, 8);
        auto r = series_eigenvalue(build_coefficient_table(ctx, 8, 8), 8);
        double gap = eigen_gap(s, r);
        add("series (N=8) reproduces shooting at n=8", gap < 1e-9, gap);
    }
    return out;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out)
{
    bool ok = true;
    for (const auto& c : selftest_checks(cfg)) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
        ok = ok && c.pass;
    }
    return ok ? kExitOk : kExitNumerical;
}

void add_common(CLI::App* app, RunConfig& cfg)
{
    app->add_option("--V", cfg.V_spec, "potential V (advanced argument)")->capture_default_str();
    app->add_option("--Q", cfg.Q_spec, "potential Q (delayed argument)")->capture_default_str();
    app->add_option("--alpha", cfg.alpha_spec, "shift alpha, value or lo:hi:steps")->capture_default_str();
    app->add_option("--beta", cfg.beta_spec, "shift beta, value or lo:hi:steps")->capture_default_str();
    app->add_option("--n", cfg.n_spec, "index range lo:hi")->capture_default_str();
    app->add_option("--method", cfg.method_spec,
                    "comma list of shooting,series,asymptotic2,asymptotic4,galerkin")
        ->capture_default_str();
    app->add_option("--series-N", cfg.series_spec, "series length in [1,8]; compare accepts lo:hi")
        ->capture_default_str();
    app->add_option("--grid", cfg.grid, "grid intervals per unit length")->capture_default_str();
    app->add_option("--K", cfg.K, "Galerkin modes")->capture_default_str();
    app->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app->add_option("--out", cfg.out_path, "output file (default stdout)");
    app->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)")->capture_default_str();
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Eigenvalues of -y'' + V(x) y(x+alpha) + Q(x) y(x-beta) on [0,1], Neumann conditions"};
    app.footer(kColumnsHelp);
    app.require_subcommand(1);
    RunConfig cfg;

    auto* eigs = app.add_subcommand("eigs", "eigenvalues per n and method");
    auto* sweep = app.add_subcommand("sweep", "eigenvalues over an alpha/beta grid");
    auto* cmp = app.add_subcommand("compare", "cross-method gaps and slope fits");
    auto* curve = app.add_subcommand("curve", "samples of t^2 + v cos(t alpha) + q cos(t beta)");
    auto* self = app.add_subcommand("selftest", "quick internal consistency checks");
    for (auto* sub : {eigs, sweep, cmp, curve, self})
        add_common(sub, cfg);
    curve->add_option("--t", cfg.t_spec, "samples lo:hi:steps (default 0:pi(n_hi+1/2):100 n_hi+1)");
    curve->add_option("--markers", cfg.markers_path, "also write (pi n, lambda_n) markers to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, ebuf;
        int code = app.exit(e, o, ebuf);
        out << o.str();
        err << ebuf.str();
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (cfg.grid < 8)
            throw DomainError("--grid must be at least 8");
        if (cfg.K < 8)
            throw DomainError("--K must be at least 8");
        if (*self)
            return cmd_selftest(cfg, out);
        Table t;
        if (*eigs)
            t = cmd_eigs(cfg);
        else if (*sweep)
            t = cmd_sweep(cfg);
        else if (*cmp)
            t = cmd_compare(cfg);
        else
            t = cmd_curve(cfg);
        emit(cfg, t, out);
        return kExitOk;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

} // namespace nlspec::cli
