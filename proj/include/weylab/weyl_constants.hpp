#pragma once

#include <vector>

namespace weylab {

enum class BoundaryCondition { Dirichlet, Neumann };

const char* to_string(BoundaryCondition bc);
BoundaryCondition parse_boundary_condition(const char* name);

// Gamma(gamma+1) / ((4 pi)^{d/2} Gamma(gamma + d/2 + 1)).
double lt_constant(double gamma, int dim);

// Leading volume term plus the boundary correction, minus for Dirichlet and plus for Neumann.
double two_term_prediction(double lambda, double gamma, int dim, double volume, double perimeter,
                           BoundaryCondition bc);

// Sum over interior angles of (pi^2 - a^2) / (24 pi a).
double corner_sum(const std::vector<double>& angles);

// Two-term prediction plus lambda^gamma times the corner sum (planar polygons).
double three_term_polygon_prediction(double lambda, double gamma, double area, double perimeter,
                                     const std::vector<double>& angles, BoundaryCondition bc);

double heat_two_term_prediction(double t, int dim, double volume, double perimeter, BoundaryCondition bc);

// |P|/(4 pi t) - per/(8 sqrt(pi t)) + corner sum.
double heat_polygon_prediction(double t, double area, double perimeter, const std::vector<double>& angles);

// Exponentially small bound on the heat trace remainder for a polygon with n corners,
// smallest angle min_angle and corner radius R.
double heat_polygon_remainder_bound(double t, int n_corners, double area, double min_angle, double corner_radius);

// Decay exponent used in the remainder envelopes: 1 for gamma >= 1, otherwise alpha_fraction * gamma.
double envelope_exponent(double gamma, double alpha_fraction = 0.9);

// Remainder envelope with unit constant, for convex domains.
double error_envelope(double lambda, double gamma, double perimeter, double inradius, int dim, BoundaryCondition bc,
                      double alpha_fraction = 0.9);

struct PredictionReport {
    double parameter = 0.0;  // lambda or t
    double computed = 0.0;
    double predicted = 0.0;
    double remainder = 0.0;  // computed - predicted
    double envelope = 0.0;   // 0 when no envelope applies
};

PredictionReport make_report(double parameter, double computed, double predicted, double envelope = 0.0);

}  // namespace weylab
