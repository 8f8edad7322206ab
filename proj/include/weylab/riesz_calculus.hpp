#pragma once

#include <string>
#include <vector>

#include "weylab/spectra.hpp"

namespace weylab {

enum class Interpolation { PiecewiseConstantLeft, PiecewiseLinear };

// coef * (x - knot)_+^power, with (x - knot)_+^0 = 1 for x >= knot.
struct PowerTerm {
    double knot = 0.0;
    double coef = 0.0;
    double power = 0.0;
};

// Samples on a grid starting at 0, plus an exact representation of the interpolant (and of
// its Riesz lifts) as a sum of truncated powers. Lifting maps each term in closed form, which
// is the per-cell kernel integral of the interpolant.
class SampledFunction {
public:
    SampledFunction(std::vector<double> grid, std::vector<double> values,
                    Interpolation interp = Interpolation::PiecewiseConstantLeft);

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    Interpolation interpolation() const { return interp_; }
    const std::vector<PowerTerm>& terms() const { return terms_; }
    // Total Riesz order applied since sampling (0 for raw samples).
    double lift_order() const { return lift_order_; }

    double evaluate(double x) const;

private:
    SampledFunction() = default;
    friend SampledFunction riesz_lift(const SampledFunction&, double);

    std::vector<double> grid_;
    std::vector<double> values_;
    Interpolation interp_ = Interpolation::PiecewiseConstantLeft;
    std::vector<PowerTerm> terms_;
    double lift_order_ = 0.0;
};

// Λ ↦ Γ(κ)^{-1} ∫_0^Λ (Λ-μ)^{κ-1} f(μ) dμ, sampled on the same grid.
SampledFunction riesz_lift(const SampledFunction& f, double kappa);

// sup over the grid of |lift(lift(f, k1), k2) - lift(f, k1 + k2)|.
double semigroup_check(const SampledFunction& f, double kappa1, double kappa2);

struct InterpolationCertificate {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double constant = 0.0;
};

// Constant of the log-convexity inequality: 4 e^{1/(2e)} for gamma <= 1, and
// 4^{N^2/4} 4 e^{1/(2e)} with N = ceil(2 gamma) above.
double interpolation_constant(double gamma);

// Sups are taken over the grid refined by `refine` points per cell.
InterpolationCertificate riesz_interpolation_certificate(const SampledFunction& f, double sigma, double gamma,
                                                         int refine = 8);

struct AizenmanLieb {
    double lhs = 0.0;
    double rhs = 0.0;
};

// lhs: Riesz mean of order gamma; rhs: gamma (gamma-1) ∫_0^λ τ^{γ-2} Tr(H - λ + τ)_- dτ by quadrature.
AizenmanLieb aizenman_lieb_check(const Spectrum& spec, double gamma, double lambda, double tail = 0.0);

// Counting function of a spectrum as an exact piecewise-constant sample up to lambda_max.
SampledFunction counting_function_sampled(const Spectrum& spec, double lambda_max);

void save_sampled_csv(const SampledFunction& f, const std::string& path);
SampledFunction load_sampled_csv(const std::string& path, Interpolation interp = Interpolation::PiecewiseConstantLeft);

}  // namespace weylab
