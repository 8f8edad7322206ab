#pragma once

#include <string>
#include <vector>

#include "weylab/spectra.hpp"

namespace weylab {

enum class ShapeFamily { Rectangle, StretchedPolygon };
const char* to_string(ShapeFamily f);

struct TracePoint {
    double param = 0.0;  // aspect for rectangles, stretch factor for polygons
    double objective = 0.0;
    double error_bar = 0.0;  // zero for exact spectra
};

struct OptimizationRun {
    ShapeFamily family = ShapeFamily::Rectangle;
    int polygon_sides = 0;
    double lambda = 0.0;
    double gamma = 0.0;
    double area = 1.0;
    BoundaryCondition bc = BoundaryCondition::Dirichlet;
    bool maximize = true;  // Dirichlet maximizes, Neumann minimizes
    bool degenerate = false;
    std::vector<TracePoint> trace;
    TracePoint best;
};

inline constexpr double kMinAspect = 0.05;
inline constexpr int kPrescanPoints = 64;

// Riesz mean of the rectangle with sides sqrt(area/rho) x sqrt(area*rho).
double rectangle_objective(double aspect, double lambda, double gamma, BoundaryCondition bc, double area = 1.0);

// Grid pre-scan on [kMinAspect, 1] followed by golden-section refinement around the best grid point.
OptimizationRun optimize_rectangle(double lambda, double gamma, BoundaryCondition bc, double tol = 1e-6,
                                   double area = 1.0);

struct ConvergenceRow {
    double lambda = 0.0;
    double best_aspect = 0.0;
    double symmetry_gap = 0.0;
    bool degenerate = false;
};

struct ConvergenceStudy {
    std::vector<ConvergenceRow> rows;
    bool gaps_nonincreasing = true;
};

ConvergenceStudy optimizer_convergence_study(const std::vector<double>& lambdas, double gamma, BoundaryCondition bc,
                                             double tol = 1e-6);

// Pairwise comparison of the two-term prediction with exact objectives over candidate aspects.
struct RankingCheck {
    int pairs = 0;
    int resolved_pairs = 0;  // predicted gap exceeds the sum of the two envelopes
    int agreements = 0;      // resolved pairs ordered the same way by prediction and exact value
};
RankingCheck ranking_check(double lambda, double gamma, BoundaryCondition bc, const std::vector<double>& aspects);

// Experimental: unit-area regular n-gon stretched by s along x and 1/s along y, Dirichlet FD spectra
// at grid sizes h and h/2. The objective uses h/2 and the error bar is the difference.
OptimizationRun optimize_stretched_polygon(int sides, double lambda, double gamma, double h,
                                           const std::vector<double>& stretches);

std::string run_json(const OptimizationRun& run);
std::string convergence_json(const ConvergenceStudy& study);
void save_trace_csv(const OptimizationRun& run, const std::string& path);

}  // namespace weylab
