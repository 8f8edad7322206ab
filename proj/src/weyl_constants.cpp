#include "weylab/weyl_constants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "weylab/errors.hpp"
#include "weylab/numerics.hpp"

namespace weylab {

const char* to_string(BoundaryCondition bc) { return bc == BoundaryCondition::Dirichlet ? "dirichlet" : "neumann"; }

BoundaryCondition parse_boundary_condition(const char* name) {
    const std::string s = name ? name : "";
    if (s == "dirichlet" || s == "D") return BoundaryCondition::Dirichlet;
    if (s == "neumann" || s == "N") return BoundaryCondition::Neumann;
    fail(ErrorKind::InvalidArgument, "unknown boundary condition '" + s + "'");
}

double lt_constant(double gamma, int dim) {
    require(gamma >= 0.0 && std::isfinite(gamma), "lt_constant: gamma must be >= 0");
    require(dim >= 1, "lt_constant: dimension must be >= 1");
    const double half = 0.5 * dim;
    return std::exp(log_gamma_fn(gamma + 1.0) - log_gamma_fn(gamma + half + 1.0) - half * std::log(4.0 * kPi));
}

namespace {

void check_lambda_gamma(double lambda, double gamma) {
    require(lambda >= 0.0 && std::isfinite(lambda), "lambda must be >= 0");
    require(gamma >= 0.0 && std::isfinite(gamma), "gamma must be >= 0");
}

double bc_sign(BoundaryCondition bc) { return bc == BoundaryCondition::Dirichlet ? -1.0 : 1.0; }

}  // namespace

double two_term_prediction(double lambda, double gamma, int dim, double volume, double perimeter,
                           BoundaryCondition bc) {
    check_lambda_gamma(lambda, gamma);
    require(dim >= 2, "two_term_prediction: dimension must be >= 2");
    require(volume > 0.0 && perimeter >= 0.0, "two_term_prediction: volume must be positive, perimeter nonnegative");
    const double bulk = lt_constant(gamma, dim) * volume * std::pow(lambda, gamma + 0.5 * dim);
    const double edge = 0.25 * lt_constant(gamma, dim - 1) * perimeter * std::pow(lambda, gamma + 0.5 * (dim - 1));
    return bulk + bc_sign(bc) * edge;
}

double corner_sum(const std::vector<double>& angles) {
    double s = 0.0;
    for (double a : angles) {
        require(a > 0.0 && a <= 2.0 * kPi, "corner_sum: angles must lie in (0, 2 pi]");
        s += (kPi * kPi - a * a) / (24.0 * kPi * a);
    }
    return s;
}

double three_term_polygon_prediction(double lambda, double gamma, double area, double perimeter,
                                     const std::vector<double>& angles, BoundaryCondition bc) {
    require(!angles.empty(), "three_term_polygon_prediction: angle list is empty");
    return two_term_prediction(lambda, gamma, 2, area, perimeter, bc) + std::pow(lambda, gamma) * corner_sum(angles);
}

double heat_two_term_prediction(double t, int dim, double volume, double perimeter, BoundaryCondition bc) {
    require(t > 0.0 && std::isfinite(t), "heat_two_term_prediction: t must be positive");
    require(dim >= 1, "heat_two_term_prediction: dimension must be >= 1");
    return std::pow(4.0 * kPi * t, -0.5 * dim) * (volume + bc_sign(bc) * 0.5 * std::sqrt(kPi * t) * perimeter);
}

double heat_polygon_prediction(double t, double area, double perimeter, const std::vector<double>& angles) {
    require(t > 0.0 && std::isfinite(t), "heat_polygon_prediction: t must be positive");
    return area / (4.0 * kPi * t) - perimeter / (8.0 * std::sqrt(kPi * t)) + corner_sum(angles);
}

double heat_polygon_remainder_bound(double t, int n_corners, double area, double min_angle, double corner_radius) {
    require(t > 0.0, "heat_polygon_remainder_bound: t must be positive");
    require(corner_radius > 0.0 && min_angle > 0.0, "heat_polygon_remainder_bound: bad corner data");
    const double r2 = corner_radius * corner_radius;
    const double s = std::sin(0.5 * min_angle);
    return (5.0 * n_corners + 20.0 * area / r2) / (min_angle * min_angle) * std::exp(-r2 * s * s / (16.0 * t));
}

double envelope_exponent(double gamma, double alpha_fraction) {
    require(gamma > 0.0, "envelope_exponent: gamma must be positive");
    require(alpha_fraction > 0.0 && alpha_fraction < 1.0, "envelope_exponent: alpha_fraction must be in (0,1)");
    return gamma >= 1.0 ? 1.0 : alpha_fraction * gamma;
}

double error_envelope(double lambda, double gamma, double perimeter, double inradius, int dim, BoundaryCondition bc,
                      double alpha_fraction) {
    check_lambda_gamma(lambda, gamma);
    require(gamma > 0.0, "error_envelope: gamma must be positive");
    require(lambda > 0.0, "error_envelope: lambda must be positive");
    require(inradius > 0.0 && perimeter > 0.0, "error_envelope: inradius and perimeter must be positive");
    require(dim >= 2, "error_envelope: dimension must be >= 2");
    const double alpha = envelope_exponent(gamma, alpha_fraction);
    const double scale = inradius * std::sqrt(lambda);
    const double base = perimeter * std::pow(lambda, gamma + 0.5 * (dim - 1));
    if (bc == BoundaryCondition::Dirichlet) return base * std::pow(scale, -alpha / 11.0);
    const double logp = std::max(0.0, std::log(scale));
    return base * (std::pow(1.0 + logp, -alpha * std::max(1.0, gamma)) + std::pow(scale, 1.0 - dim));
}

PredictionReport make_report(double parameter, double computed, double predicted, double envelope) {
    return {parameter, computed, predicted, computed - predicted, envelope};
}

}  // namespace weylab
