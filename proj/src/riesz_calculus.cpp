#include "weylab/riesz_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "weylab/errors.hpp"
#include "weylab/numerics.hpp"

namespace weylab {

SampledFunction::SampledFunction(std::vector<double> grid, std::vector<double> values, Interpolation interp)
    : grid_(std::move(grid)), values_(std::move(values)), interp_(interp) {
    require(!grid_.empty(), "SampledFunction: grid is empty");
    require(grid_.size() == values_.size(), "SampledFunction: grid and values differ in length");
    require(grid_.front() == 0.0, "SampledFunction: grid must start at 0");
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        require(std::isfinite(grid_[i]) && std::isfinite(values_[i]), "SampledFunction: non-finite entry");
        if (i > 0) require(grid_[i] > grid_[i - 1], "SampledFunction: grid must be strictly increasing");
    }
    const std::size_t n = grid_.size();
    if (interp_ == Interpolation::PiecewiseConstantLeft) {
        terms_.push_back({0.0, values_[0], 0.0});
        for (std::size_t i = 1; i < n; ++i)
            if (values_[i] != values_[i - 1]) terms_.push_back({grid_[i], values_[i] - values_[i - 1], 0.0});
    } else {
        terms_.push_back({0.0, values_[0], 0.0});
        double prev_slope = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double slope = (values_[i + 1] - values_[i]) / (grid_[i + 1] - grid_[i]);
            if (slope != prev_slope) terms_.push_back({grid_[i], slope - prev_slope, 1.0});
            prev_slope = slope;
        }
    }
}

double SampledFunction::evaluate(double x) const {
    double s = 0.0;
    for (const PowerTerm& t : terms_) {
        if (t.power == 0.0) {
            if (x >= t.knot) s += t.coef;
        } else if (x > t.knot) {
            s += t.coef * (t.power == 1.0 ? x - t.knot : std::pow(x - t.knot, t.power));
        }
    }
    return s;
}

SampledFunction riesz_lift(const SampledFunction& f, double kappa) {
    if (!(kappa > 0.0) || !std::isfinite(kappa)) fail(ErrorKind::InvalidArgument, "riesz_lift: kappa must be positive");
    SampledFunction out;
    out.grid_ = f.grid_;
    out.interp_ = f.interp_;
    out.lift_order_ = f.lift_order_ + kappa;
    out.terms_.reserve(f.terms_.size());
    for (const PowerTerm& t : f.terms_) {
        const double scale = std::exp(log_gamma_fn(t.power + 1.0) - log_gamma_fn(t.power + kappa + 1.0));
        out.terms_.push_back({t.knot, t.coef * scale, t.power + kappa});
    }
    out.values_.resize(out.grid_.size());
    for (std::size_t i = 0; i < out.grid_.size(); ++i) out.values_[i] = out.evaluate(out.grid_[i]);
    return out;
}

double semigroup_check(const SampledFunction& f, double kappa1, double kappa2) {
    const SampledFunction nested = riesz_lift(riesz_lift(f, kappa1), kappa2);
    const SampledFunction direct = riesz_lift(f, kappa1 + kappa2);
    double dev = 0.0;
    for (std::size_t i = 0; i < f.grid().size(); ++i)
        dev = std::max(dev, std::abs(nested.values()[i] - direct.values()[i]));
    return dev;
}

double interpolation_constant(double gamma) {
    require(gamma > 0.0, "interpolation_constant: gamma must be positive");
    const double base = 4.0 * std::exp(1.0 / (2.0 * std::exp(1.0)));
    if (gamma <= 1.0) return base;
    const double n = std::ceil(2.0 * gamma);
    return std::pow(4.0, n * n / 4.0) * base;
}

namespace {

double sup_abs(const SampledFunction& f, int refine) {
    const auto& g = f.grid();
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        s = std::max(s, std::abs(f.evaluate(g[i])));
        if (i + 1 < g.size())
            for (int k = 1; k <= refine; ++k)
                s = std::max(s, std::abs(f.evaluate(g[i] + (g[i + 1] - g[i]) * k / (refine + 1.0))));
    }
    return s;
}

}  // namespace

InterpolationCertificate riesz_interpolation_certificate(const SampledFunction& f, double sigma, double gamma,
                                                         int refine) {
    if (!(sigma > 0.0 && sigma < gamma))
        fail(ErrorKind::InvalidArgument, "riesz_interpolation_certificate: need 0 < sigma < gamma");
    require(refine >= 0, "riesz_interpolation_certificate: refine must be >= 0");
    InterpolationCertificate c;
    c.constant = interpolation_constant(gamma);
    c.lhs = sup_abs(riesz_lift(f, sigma), refine);
    const double base = sup_abs(f, refine);
    const double top = sup_abs(riesz_lift(f, gamma), refine);
    const double theta = sigma / gamma;
    c.rhs = c.constant * std::pow(base, 1.0 - theta) * std::pow(top, theta);
    c.ratio = c.lhs == 0.0 ? 0.0 : c.lhs / c.rhs;
    return c;
}

AizenmanLieb aizenman_lieb_check(const Spectrum& spec, double gamma, double lambda, double tail) {
    if (!(gamma > 1.0)) fail(ErrorKind::InvalidArgument, "aizenman_lieb_check: gamma must exceed 1");
    require(lambda >= 0.0 && tail >= 0.0, "aizenman_lieb_check: lambda and tail must be >= 0");
    if (lambda + tail > spec.complete_below)
        fail(ErrorKind::OutOfCertifiedRange, "aizenman_lieb_check: lambda + tail above the certified threshold");
    AizenmanLieb out;
    out.lhs = riesz_mean(spec, lambda, gamma);
    if (lambda == 0.0) return out;
    // With τ = u^{1/(γ-1)}, τ^{γ-2} dτ = du / (γ-1); the integrand is then piecewise smooth
    // with kinks where λ - τ crosses an eigenvalue.
    const double p = 1.0 / (gamma - 1.0);
    const double umax = std::pow(lambda, gamma - 1.0);
    auto integrand = [&](double u) { return riesz_mean(spec, lambda - std::pow(u, p), 1.0); };
    std::vector<double> breaks;
    const long long n = counting_function(spec, lambda);
    for (long long i = 0; i < n; ++i) breaks.push_back(std::pow(lambda - spec.eigenvalues[i], gamma - 1.0));
    const QuadResult q = integrate(integrand, 0.0, umax, 1e-13 * std::max(1.0, std::abs(out.lhs)), 1e-13, breaks);
    out.rhs = gamma * q.value;
    return out;
}

SampledFunction counting_function_sampled(const Spectrum& spec, double lambda_max) {
    require(lambda_max > 0.0, "counting_function_sampled: lambda_max must be positive");
    if (lambda_max > spec.complete_below)
        fail(ErrorKind::OutOfCertifiedRange, "counting_function_sampled: lambda_max above the certified threshold");
    std::vector<double> grid{0.0}, values{0.0};
    std::size_t i = 0;
    const auto& ev = spec.eigenvalues;
    // Zero eigenvalues (Neumann) count from the start.
    while (i < ev.size() && ev[i] <= 0.0) ++i;
    values[0] = static_cast<double>(i);
    while (i < ev.size() && ev[i] < lambda_max) {
        const double x = ev[i];
        while (i < ev.size() && ev[i] == x) ++i;
        grid.push_back(x);
        values.push_back(static_cast<double>(i));
    }
    if (grid.back() < lambda_max) {
        grid.push_back(lambda_max);
        values.push_back(values.back());
    }
    return SampledFunction(grid, values, Interpolation::PiecewiseConstantLeft);
}

void save_sampled_csv(const SampledFunction& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
    out << "lambda,value\n";
    char a[64], b[64];
    for (std::size_t i = 0; i < f.grid().size(); ++i) {
        std::snprintf(a, sizeof a, "%.17g", f.grid()[i]);
        std::snprintf(b, sizeof b, "%.17g", f.values()[i]);
        out << a << ',' << b << '\n';
    }
    if (!out) fail(ErrorKind::Io, "write to '" + path + "' failed");
}

SampledFunction load_sampled_csv(const std::string& path, Interpolation interp) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line.rfind("lambda,value", 0) != 0)
        fail(ErrorKind::Io, "CSV header must be 'lambda,value'");
    std::vector<double> g, v;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) fail(ErrorKind::Io, "malformed CSV row: " + line);
        char* end = nullptr;
        g.push_back(std::strtod(line.c_str(), &end));
        v.push_back(std::strtod(line.c_str() + comma + 1, &end));
    }
    return SampledFunction(g, v, interp);
}

}  // namespace weylab
